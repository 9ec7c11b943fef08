#pragma once

#include <array>
#include <optional>

#include "lpl/lie.hpp"
#include "lpl/sampling.hpp"

namespace lpl {

/// C = lambda + h° in g*. The tangent space at every point is h° and the
/// conormal space is canonically h.
class AffineSubspace {
 public:
  AffineSubspace(LieAlgebra g, Subspace h, Vector base);

  [[nodiscard]] const LieAlgebra& algebra() const { return g_; }
  [[nodiscard]] const Subspace& conormal() const { return h_; }
  [[nodiscard]] const Vector& base() const { return base_; }
  [[nodiscard]] const Subspace& direction() const { return direction_; }
  [[nodiscard]] std::size_t dim() const { return direction_.dim(); }
  [[nodiscard]] bool contains(std::span<const Rational> x) const;
  [[nodiscard]] std::vector<Vector> sample_points(const SampleSpec& spec) const;

 private:
  LieAlgebra g_;
  Subspace h_;
  Vector base_;
  Subspace direction_;
};

/// The image of the conormal space under the Poisson sharp map at x:
/// span { coad_v(x) : v in h }. Throws std::invalid_argument if x is not on C.
Subspace sharp_conormal_at(const AffineSubspace& c, std::span<const Rational> x);

enum class CoisotropyWitness { None, NotSubalgebra, NotCharacter };

struct CoisotropyResult {
  bool coisotropic = false;
  CoisotropyWitness kind = CoisotropyWitness::None;
  /// NotSubalgebra: basis indices (u, v) of h with [u, v] outside h.
  std::array<std::size_t, 2> pair{};
  /// The offending bracket [u, v], or the element of [h, h] with <lambda, w> != 0.
  Vector witness;
};

/// Exact: C is coisotropic iff h is a subalgebra and lambda vanishes on [h, h].
CoisotropyResult is_coisotropic(const AffineSubspace& c);

enum class RankVerdict { CertifiedConstant, SampledConstant, NotConstant };
const char* to_string(RankVerdict v);

struct RankCounterexample {
  Vector first;
  std::size_t first_rank = 0;
  Vector second;
  std::size_t second_rank = 0;
};

struct PrePoissonResult {
  RankVerdict verdict = RankVerdict::NotConstant;
  /// Rank of TC + #N*C at the base point.
  std::size_t base_rank = 0;
  /// Largest rank seen (equals base_rank when certified).
  std::size_t generic_rank = 0;
  /// h° + coad_h(lambda), set only for CertifiedConstant.
  std::optional<Subspace> certified_space;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// C is a single point; only the data at lambda is meaningful.
  bool pointwise_only = false;
  std::optional<RankCounterexample> counterexample;
};

/// dim(T_xC + #N*_xC), computed as dim h° + rank of <x, [., .]> on h.
std::size_t tangent_plus_sharp_rank(const AffineSubspace& c, std::span<const Rational> x);

/// Certified when h is a subalgebra (the sum is h° + coad_h(lambda) at every
/// point); otherwise the rank is compared at the base point and at
/// `spec.count` sample points.
PrePoissonResult pre_poisson_check(const AffineSubspace& c, const SampleSpec& spec = {});

struct PointwiseFlags {
  std::size_t characteristic_rank = 0;  ///< dim(TC ∩ #N*_xC)
  std::size_t sharp_rank = 0;           ///< dim #N*_xC
  bool poisson_dirac = false;           ///< pointwise condition only
  bool cosymplectic = false;
};

PointwiseFlags pointwise_flags(const AffineSubspace& c, std::span<const Rational> x);

struct ClassificationReport {
  CoisotropyResult coisotropic;
  PrePoissonResult pre_poisson;
  std::size_t generic_rank = 0;
  PointwiseFlags at_base;
};

ClassificationReport classify(const AffineSubspace& c, const SampleSpec& spec = {});

struct PreimageResult {
  AffineSubspace c;
  /// lambda + (h° (+) lift(S)) for the greedy slice S through nu.
  std::optional<AffineSubspace> extension;
  /// Tangent space of the H-coadjoint orbit through nu, in h* coordinates.
  std::optional<Subspace> orbit_tangent;
};

/// Preimage of nu under the restriction g* -> h*. nu is given in coordinates
/// dual to the canonical basis of h; its lift vanishes on the greedy
/// complement of h. Throws Refusal if h is not a subalgebra.
PreimageResult preimage_construction(const LieAlgebra& g, const Subspace& h,
                                     std::span<const Rational> nu, bool with_slice);

struct GraphCoisotropy {
  LieAlgebra product;  ///< g (+) -h
  Subspace w;          ///< {(-phi(v), v)}, annihilator of the graph of phi*
  bool coisotropic = false;
};

/// Graph of the dual map phi*: g* -> h* inside g* x h* with Pi_g - Pi_h.
GraphCoisotropy graph_coisotropy(const LinearMap& phi);

AffineSubspace product(const AffineSubspace& c1, const AffineSubspace& c2);

}  // namespace lpl
