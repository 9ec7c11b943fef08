#include "lpl/embedding.hpp"

#include <stdexcept>

#include "lpl/errors.hpp"

namespace lpl {

namespace {

Subspace tangent_plus_sharp_at_base(const AffineSubspace& c) {
  return sum(c.direction(), sharp_conormal_at(c, c.base()));
}

void require_complement(const Subspace& r, const Subspace& u) {
  if (r.ambient_dim() != u.ambient_dim()) throw DimensionMismatch("R has the wrong ambient dimension");
  if (r.dim() + u.dim() != u.ambient_dim() || !intersect(r, u).is_zero()) {
    throw std::invalid_argument("R is not a complement of TC + #N*C at the base point");
  }
}

std::vector<Vector> sharp_images(const LieAlgebra& g, const Subspace& p,
                                 std::span<const Rational> x) {
  std::vector<Vector> out;
  for (const auto& v : p.basis()) out.push_back(coad(g, v, x));
  return out;
}

}  // namespace

Subspace choose_R(const AffineSubspace& c, const SampleSpec& spec,
                  const std::optional<Subspace>& user_r) {
  const auto pp = pre_poisson_check(c, spec);
  if (pp.verdict == RankVerdict::NotConstant) {
    throw Refusal("rank of TC + #N*C is not constant along C (" +
                  std::to_string(pp.counterexample->first_rank) + " at " +
                  to_string(pp.counterexample->first) + ", " +
                  std::to_string(pp.counterexample->second_rank) + " at " +
                  to_string(pp.counterexample->second) + ")");
  }
  const Subspace u = tangent_plus_sharp_at_base(c);
  if (user_r) {
    require_complement(*user_r, u);
    return *user_r;
  }
  return choose_complement(u, Subspace::full(c.algebra().dim()));
}

Extension extend(const AffineSubspace& c, const Subspace& r) {
  require_complement(r, tangent_plus_sharp_at_base(c));
  const Subspace dir = sum(c.direction(), r);
  Subspace p = annihilator(dir);
  AffineSubspace ptilde(c.algebra(), p, c.base());
  return Extension{c, r, std::move(ptilde), std::move(p), false};
}

Extension build_extension(const AffineSubspace& c, const SampleSpec& spec,
                          const std::optional<Subspace>& user_r) {
  const Subspace r = choose_R(c, spec, user_r);
  Extension e = extend(c, r);
  e.sampled_evidence_only = !is_subalgebra(c.algebra(), c.conormal());
  return e;
}

bool cosymplectic_at(const Extension& e, std::span<const Rational> x) {
  if (!e.ptilde.contains(x)) throw std::invalid_argument("point " + to_string(x) + " is not on P~");
  return rank(restricted_form(e.c.algebra(), e.p.basis(), x)) == e.p.dim();
}

CosymplecticLocus cosymplectic_locus(const Extension& e, const SampleSpec& spec,
                                     const std::vector<Vector>& extra) {
  CosymplecticLocus locus;
  locus.never_cosymplectic = e.p.dim() % 2 == 1;
  std::vector<Vector> pts{e.ptilde.base()};
  for (auto& x : e.ptilde.sample_points(spec)) pts.push_back(std::move(x));
  pts.insert(pts.end(), extra.begin(), extra.end());
  for (auto& x : pts) {
    const bool ok = !locus.never_cosymplectic && cosymplectic_at(e, x);
    if (!ok) ++locus.failures;
    locus.points.push_back({std::move(x), ok});
  }
  return locus;
}

ConstancyResult constant_sharp_conormal(const Extension& e, const SampleSpec& spec) {
  const auto& g = e.c.algebra();
  const std::size_t n = g.dim();
  ConstancyResult r;

  r.reference = e.ptilde.base();
  std::size_t best = Subspace::span(n, sharp_images(g, e.p, r.reference)).dim();
  for (const auto& x : e.ptilde.sample_points(spec)) {
    if (best == e.p.dim()) break;
    const std::size_t rk = Subspace::span(n, sharp_images(g, e.p, x)).dim();
    if (rk > best) {
      best = rk;
      r.reference = x;
    }
  }
  r.k_annihilator = Subspace::span(n, sharp_images(g, e.p, r.reference));

  std::vector<Vector> generators{e.ptilde.base()};
  const auto& dirs = e.ptilde.direction().basis();
  generators.insert(generators.end(), dirs.begin(), dirs.end());
  for (const auto& v : e.p.basis())
    for (const auto& u : generators) {
      Vector img = coad(g, v, u);
      if (!r.k_annihilator.contains(img)) {
        r.witness_p = v;
        r.witness_direction = u;
        r.witness_image = std::move(img);
        return r;
      }
    }
  r.certified = true;
  return r;
}

SymmetricPairReport decomposition_check(const LieAlgebra& g, const Subspace& k, const Subspace& p) {
  if (k.ambient_dim() != g.dim() || p.ambient_dim() != g.dim()) {
    throw DimensionMismatch("decomposition_check: k and p must live in g");
  }
  SymmetricPairReport r{k, p};
  r.direct_sum = k.dim() + p.dim() == g.dim() && intersect(k, p).is_zero();
  r.k_subalgebra = is_subalgebra(g, k);
  r.kp_in_p = p.contains(subspace_bracket(g, k, p));
  r.pp_in_k = k.contains(subspace_bracket(g, p, p));
  return r;
}

SymmetricPairReport symmetric_pair_analysis(const Extension& e, const ConstancyResult& constancy) {
  if (!constancy.certified) throw Refusal("#N*P~ is not constant; k is undefined");
  return decomposition_check(e.c.algebra(), annihilator(constancy.k_annihilator), e.p);
}

bool injectivity_at(const LieAlgebra& g, const Subspace& p, std::span<const Rational> y) {
  if (y.size() != g.dim()) throw DimensionMismatch("injectivity_at: point has wrong length");
  return Subspace::span(g.dim(), sharp_images(g, p, y)).dim() == p.dim();
}

LieAlgebra induced_structure(const LieAlgebra& g, const Subspace& k, const Subspace& p) {
  const auto check = decomposition_check(g, k, p);
  if (!check.direct_sum) throw Refusal("induced_structure: k (+) p is not g");
  if (!check.k_subalgebra) {
    throw Refusal("induced_structure: k is not a subalgebra, the induced structure is not linear");
  }
  const std::size_t m = k.dim();
  std::vector<Vector> cols = k.basis();
  cols.insert(cols.end(), p.basis().begin(), p.basis().end());
  const Matrix adapted = Matrix::from_columns(g.dim(), cols);

  std::vector<StructureConstant> cs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector coords = *solve(adapted, g.bracket(k.basis()[a], k.basis()[b]));
      for (std::size_t l = 0; l < m; ++l) {
        if (!coords[l].is_zero()) cs.push_back({a, b, l, coords[l]});
      }
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("k" + std::to_string(a + 1));
  return LieAlgebra("induced(" + g.name() + ")", std::move(labels), cs);
}

bool coisotropic_in_extension(const Extension& e, std::span<const Rational> x) {
  if (!e.c.contains(x)) throw std::invalid_argument("point " + to_string(x) + " is not on C");
  if (!cosymplectic_at(e, x)) throw std::invalid_argument("P~ is not cosymplectic at " + to_string(x));
  const auto& g = e.c.algebra();
  const auto& pb = e.p.basis();
  const Matrix form = restricted_form(g, pb, x);
  for (const auto& v : e.c.conormal().basis()) {
    // Find w in p with B_x(p_i, v + w) = 0 for all i, i.e. form * coeffs = -B_x(p_i, v).
    Vector rhs(pb.size());
    for (std::size_t i = 0; i < pb.size(); ++i) rhs[i] = -dot(x, g.bracket(pb[i], v));
    const Vector coeffs = *solve(form, rhs);
    Vector xi = v;
    for (std::size_t i = 0; i < pb.size(); ++i) xi = axpy(xi, coeffs[i], pb[i]);
    if (!e.c.direction().contains(coad(g, xi, x))) return false;
  }
  return true;
}

}  // namespace lpl
