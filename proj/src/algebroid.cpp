#include "lpl/algebroid.hpp"

#include "lpl/errors.hpp"
#include "lpl/lie_poisson.hpp"

namespace lpl {

AlgebroidFiber algebroid_fiber_d(const AffineSubspace& c) {
  const auto& g = c.algebra();
  if (!is_subalgebra(g, c.conormal())) throw Refusal("algebroid_fiber_d: h is not a subalgebra");
  const auto& hb = c.conormal().basis();
  // Coefficients a with sum_a a_i h_i in d solve B^T a = 0 for the form on h.
  const Matrix form = restricted_form(g, hb, c.base());
  std::vector<Vector> gens;
  const RankKernelImage rki = rank_kernel_image(form.transpose());
  for (const auto& coeffs : rki.kernel.basis()) {
    Vector v(g.dim());
    for (std::size_t a = 0; a < hb.size(); ++a) v = axpy(v, coeffs[a], hb[a]);
    gens.push_back(std::move(v));
  }
  AlgebroidFiber f{Subspace::span(g.dim(), gens), false};
  f.is_subalgebra = is_subalgebra(g, f.d);
  return f;
}

Subspace isotropy_algebra(const LieAlgebra& g, std::span<const Rational> x) {
  if (x.size() != g.dim()) throw DimensionMismatch("isotropy_algebra: point has wrong length");
  // Row v of the coad matrix stack is coad_{e_v}(x); the isotropy algebra is
  // the left kernel, i.e. the kernel of the transpose.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < g.dim(); ++i) rows.push_back(coad(g, unit_vector(g.dim(), i), x));
  return rank_kernel_image(Matrix::from_rows(g.dim(), rows).transpose()).kernel;
}

AlgebroidFiberReport transversal_orbit_report(const AffineSubspace& c, const SampleSpec& spec) {
  const auto& g = c.algebra();
  AlgebroidFiberReport report;
  if (is_subalgebra(g, c.conormal())) report.fiber = algebroid_fiber_d(c);

  std::vector<Vector> pts{c.base()};
  for (auto& x : c.sample_points(spec)) pts.push_back(std::move(x));
  for (auto& x : pts) {
    const RankKernelImage pi = rank_kernel_image(bivector_at(g, x));
    OrbitSample s;
    s.orbit_dim = pi.rank;
    s.isotropy_dim = isotropy_algebra(g, x).dim();
    s.transversal = intersect(c.direction(), pi.image).is_zero();
    if (!report.samples.empty() && s.orbit_dim != report.samples.front().orbit_dim) {
      report.constant_orbit_dim = false;
    }
    report.all_transversal = report.all_transversal && s.transversal;
    s.x = std::move(x);
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace lpl
