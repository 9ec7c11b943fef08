#pragma once

#include <optional>

#include "lpl/submanifold.hpp"

namespace lpl {

/// A cosymplectic thickening P~ = lambda + (TC (+) R) of an affine C, with
/// p the annihilator of its direction (so P~ = lambda + p°).
struct Extension {
  AffineSubspace c;
  Subspace r;
  AffineSubspace ptilde;
  Subspace p;
  /// The rank of TC + #N*C was only sampled, not proved, to be constant.
  bool sampled_evidence_only = false;
};

/// Greedy complement of T_lambda C + #N*_lambda C in g*, or the validated
/// user choice. Throws Refusal when the rank is not constant along C and
/// std::invalid_argument when user_r is not a complement at lambda.
Subspace choose_R(const AffineSubspace& c, const SampleSpec& spec = {},
                  const std::optional<Subspace>& user_r = std::nullopt);

/// Extends C along R. Throws std::invalid_argument unless
/// R (+) (T_lambda C + #N*_lambda C) = g*.
Extension extend(const AffineSubspace& c, const Subspace& r);

/// choose_R followed by extend, stamping sampled evidence.
Extension build_extension(const AffineSubspace& c, const SampleSpec& spec = {},
                          const std::optional<Subspace>& user_r = std::nullopt);

/// P~ is cosymplectic at x iff <x, [., .]> restricted to p is nondegenerate.
bool cosymplectic_at(const Extension& e, std::span<const Rational> x);

struct LocusPoint {
  Vector x;
  bool cosymplectic = false;
};

struct CosymplecticLocus {
  /// dim p is odd, so the restricted skew form is degenerate everywhere.
  bool never_cosymplectic = false;
  std::vector<LocusPoint> points;  ///< base point, samples, then extras
  std::size_t failures = 0;
  [[nodiscard]] bool nonempty() const { return failures < points.size(); }
};

/// Evaluates cosymplecticity at lambda, at `spec.count` sample points of P~
/// and at `extra` (each must lie on P~).
CosymplecticLocus cosymplectic_locus(const Extension& e, const SampleSpec& spec = {},
                                     const std::vector<Vector>& extra = {});

struct ConstancyResult {
  bool certified = false;
  /// k° = #N*_x P~ on the open set where its dimension is maximal.
  Subspace k_annihilator;
  /// Point of P~ at which the span was taken.
  Vector reference;
  /// NotConstant witness: coad_{p_i}(u) leaves k°, where u is a direction
  /// generator of P~ (or lambda itself).
  std::optional<Vector> witness_p;
  std::optional<Vector> witness_direction;
  std::optional<Vector> witness_image;
};

/// Exact test that #N*_x P~ = coad_p(x) is the same subspace on an open
/// subset of P~. Since coad_v(x) is linear in x, the space is constant on an
/// open set iff coad_{p_i}(lambda) and every coad_{p_i}(u_j) lie in the span
/// coad_p(x_ref) at a point of maximal rank. The reference point is lambda if
/// no sample point beats its rank.
ConstancyResult constant_sharp_conormal(const Extension& e, const SampleSpec& spec = {});

struct SymmetricPairReport {
  Subspace k;
  Subspace p;
  bool direct_sum = false;  ///< k (+) p = g
  bool k_subalgebra = false;
  bool kp_in_p = false;
  bool pp_in_k = false;
  [[nodiscard]] bool symmetric_pair() const {
    return direct_sum && k_subalgebra && kp_in_p && pp_in_k;
  }
};

/// Bracket conditions for a user-supplied decomposition g = k (+) p.
SymmetricPairReport decomposition_check(const LieAlgebra& g, const Subspace& k, const Subspace& p);

/// k = (k°)° from a certified constancy result. Throws Refusal otherwise.
SymmetricPairReport symmetric_pair_analysis(const Extension& e, const ConstancyResult& constancy);

/// True iff v -> coad_v(y) is injective on p.
bool injectivity_at(const LieAlgebra& g, const Subspace& p, std::span<const Rational> y);

/// Linear Poisson structure induced on P~ = lambda + p°. Linear functions on
/// P~ extended constantly along k° are the elements of k; the bracket is
/// [k_a, k_b] projected to k along p, in the canonical basis of k.
/// Throws Refusal unless k (+) p = g and k is a subalgebra.
LieAlgebra induced_structure(const LieAlgebra& g, const Subspace& k, const Subspace& p);

/// Coisotropy of C inside P~ at x in C where P~ is cosymplectic: every
/// covector of P~ vanishing on TC, extended by zero on #N*_x P~ (found by
/// inverting the form on p), is sent by # into TC. Throws
/// std::invalid_argument if x is not on C or P~ is not cosymplectic at x.
bool coisotropic_in_extension(const Extension& e, std::span<const Rational> x);

}  // namespace lpl
