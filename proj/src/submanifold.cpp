#include "lpl/submanifold.hpp"

#include <stdexcept>

#include "lpl/errors.hpp"

namespace lpl {

AffineSubspace::AffineSubspace(LieAlgebra g, Subspace h, Vector base)
    : g_(std::move(g)), h_(std::move(h)), base_(std::move(base)) {
  if (h_.ambient_dim() != g_.dim() || base_.size() != g_.dim()) {
    throw DimensionMismatch("affine subspace: h and lambda must have length " +
                            std::to_string(g_.dim()));
  }
  direction_ = annihilator(h_);
}

bool AffineSubspace::contains(std::span<const Rational> x) const {
  if (x.size() != g_.dim()) throw DimensionMismatch("point has wrong length");
  return direction_.contains(sub(x, base_));
}

std::vector<Vector> AffineSubspace::sample_points(const SampleSpec& spec) const {
  return sample_affine(base_, direction_.basis(), spec);
}

static void require_on(const AffineSubspace& c, std::span<const Rational> x) {
  if (!c.contains(x)) throw std::invalid_argument("point " + to_string(x) + " is not on C");
}

Subspace sharp_conormal_at(const AffineSubspace& c, std::span<const Rational> x) {
  require_on(c, x);
  std::vector<Vector> gens;
  for (const auto& v : c.conormal().basis()) gens.push_back(coad(c.algebra(), v, x));
  return Subspace::span(c.algebra().dim(), gens);
}

CoisotropyResult is_coisotropic(const AffineSubspace& c) {
  const auto& g = c.algebra();
  const auto& hb = c.conormal().basis();
  CoisotropyResult r;
  for (std::size_t a = 0; a < hb.size(); ++a)
    for (std::size_t b = a + 1; b < hb.size(); ++b) {
      Vector br = g.bracket(hb[a], hb[b]);
      if (!c.conormal().contains(br)) {
        r.kind = CoisotropyWitness::NotSubalgebra;
        r.pair = {a, b};
        r.witness = std::move(br);
        return r;
      }
    }
  const Subspace hh = subspace_bracket(g, c.conormal(), c.conormal());
  for (const auto& w : hh.basis()) {
    if (!dot(c.base(), w).is_zero()) {
      r.kind = CoisotropyWitness::NotCharacter;
      r.witness = w;
      return r;
    }
  }
  r.coisotropic = true;
  return r;
}

const char* to_string(RankVerdict v) {
  switch (v) {
    case RankVerdict::CertifiedConstant: return "CertifiedConstant";
    case RankVerdict::SampledConstant: return "SampledConstant";
    case RankVerdict::NotConstant: return "NotConstant";
  }
  return "?";
}

std::size_t tangent_plus_sharp_rank(const AffineSubspace& c, std::span<const Rational> x) {
  require_on(c, x);
  return c.dim() + rank(restricted_form(c.algebra(), c.conormal().basis(), x));
}

PrePoissonResult pre_poisson_check(const AffineSubspace& c, const SampleSpec& spec) {
  const auto& g = c.algebra();
  PrePoissonResult r;
  r.pointwise_only = c.dim() == 0;
  r.base_rank = tangent_plus_sharp_rank(c, c.base());
  r.generic_rank = r.base_rank;

  if (is_subalgebra(g, c.conormal())) {
    // T_xC + #N*_xC = h° + coad_h(lambda) for every x on C.
    std::vector<Vector> gens = c.direction().basis();
    for (const auto& v : c.conormal().basis()) gens.push_back(coad(g, v, c.base()));
    r.certified_space = Subspace::span(g.dim(), gens);
    r.verdict = RankVerdict::CertifiedConstant;
    return r;
  }

  r.samples = spec.count;
  r.seed = spec.seed;
  r.verdict = RankVerdict::SampledConstant;
  for (const auto& x : c.sample_points(spec)) {
    const std::size_t rk = tangent_plus_sharp_rank(c, x);
    r.generic_rank = std::max(r.generic_rank, rk);
    if (rk != r.base_rank && !r.counterexample) {
      r.verdict = RankVerdict::NotConstant;
      r.counterexample = RankCounterexample{c.base(), r.base_rank, x, rk};
    }
  }
  return r;
}

PointwiseFlags pointwise_flags(const AffineSubspace& c, std::span<const Rational> x) {
  const Subspace sharp = sharp_conormal_at(c, x);
  PointwiseFlags f;
  f.sharp_rank = sharp.dim();
  f.characteristic_rank = intersect(c.direction(), sharp).dim();
  f.poisson_dirac = f.characteristic_rank == 0;
  f.cosymplectic = f.poisson_dirac && c.dim() + f.sharp_rank == c.algebra().dim();
  return f;
}

ClassificationReport classify(const AffineSubspace& c, const SampleSpec& spec) {
  ClassificationReport r;
  r.coisotropic = is_coisotropic(c);
  r.pre_poisson = pre_poisson_check(c, spec);
  r.generic_rank = r.pre_poisson.generic_rank;
  r.at_base = pointwise_flags(c, c.base());
  return r;
}

PreimageResult preimage_construction(const LieAlgebra& g, const Subspace& h,
                                     std::span<const Rational> nu, bool with_slice) {
  const std::size_t n = g.dim();
  if (h.ambient_dim() != n) throw DimensionMismatch("preimage_construction: h must live in g");
  if (nu.size() != h.dim()) {
    throw DimensionMismatch("preimage_construction: nu must have length dim h = " +
                            std::to_string(h.dim()));
  }
  if (!is_subalgebra(g, h)) throw Refusal("preimage_construction: h is not a subalgebra");

  // Rows: basis of h, then its greedy complement. Solving rows * y = (s, 0)
  // lifts s in h* to the covector that vanishes on the complement.
  std::vector<Vector> rows = h.basis();
  const Subspace comp = choose_complement(h, Subspace::full(n));
  rows.insert(rows.end(), comp.basis().begin(), comp.basis().end());
  const Matrix lift_system = Matrix::from_rows(n, rows);
  auto lift = [&](std::span<const Rational> s) {
    Vector rhs(n);
    for (std::size_t i = 0; i < s.size(); ++i) rhs[i] = s[i];
    return *solve(lift_system, rhs);
  };

  const Vector lambda = lift(nu);
  PreimageResult out{AffineSubspace(g, h, lambda), std::nullopt, std::nullopt};
  if (!with_slice) return out;

  // Orbit tangent at nu in h*: rows (<lambda, [h_a, h_b]>)_b for each a.
  const Matrix form = restricted_form(g, h.basis(), lambda);
  const Subspace tangent = Subspace::row_space(form);
  const Subspace slice = choose_complement(tangent, Subspace::full(h.dim()));
  std::vector<Vector> dir = out.c.direction().basis();
  for (const auto& s : slice.basis()) dir.push_back(lift(s));
  const Subspace pdir = Subspace::span(n, dir);
  out.extension = AffineSubspace(g, annihilator(pdir), lambda);
  out.orbit_tangent = tangent;
  return out;
}

GraphCoisotropy graph_coisotropy(const LinearMap& phi) {
  const std::size_t ng = phi.codomain.dim();
  const std::size_t nh = phi.domain.dim();
  if (phi.matrix.rows() != ng || phi.matrix.cols() != nh) {
    throw DimensionMismatch("graph_coisotropy: matrix shape does not match domain/codomain");
  }
  GraphCoisotropy r{direct_sum(phi.codomain, phi.domain, -1), {}, false};
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < nh; ++j) {
    Vector v(ng + nh);
    for (std::size_t i = 0; i < ng; ++i) v[i] = -phi.matrix(i, j);
    v[ng + j] = 1;
    gens.push_back(std::move(v));
  }
  r.w = Subspace::span(ng + nh, gens);
  r.coisotropic = is_subalgebra(r.product, r.w);
  return r;
}

AffineSubspace product(const AffineSubspace& c1, const AffineSubspace& c2) {
  const std::size_t n1 = c1.algebra().dim(), n2 = c2.algebra().dim();
  std::vector<Vector> gens;
  for (const auto& v : c1.conormal().basis()) {
    Vector w(n1 + n2);
    std::copy(v.begin(), v.end(), w.begin());
    gens.push_back(std::move(w));
  }
  for (const auto& v : c2.conormal().basis()) {
    Vector w(n1 + n2);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n1));
    gens.push_back(std::move(w));
  }
  Vector base = c1.base();
  base.insert(base.end(), c2.base().begin(), c2.base().end());
  return AffineSubspace(direct_sum(c1.algebra(), c2.algebra(), 1), Subspace::span(n1 + n2, gens),
                        std::move(base));
}

}  // namespace lpl
