#pragma once

#include <cstdint>
#include <random>

#include "lpl/linalg.hpp"

namespace lpl {

struct SampleSpec {
  std::size_t count = 64;
  std::uint64_t seed = 1;
};

/// Deterministic source of exact rational sample values. Numerators are
/// uniform in [-1000, 1000], denominators in [1, 1000]. The mapping from the
/// engine output is spelled out here (not via std::uniform_int_distribution)
/// so streams are identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}
  Rational next();
  /// base + sum_a t_a * directions[a], one fresh t_a per direction.
  Vector point_on(std::span<const Rational> base, const std::vector<Vector>& directions);

 private:
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::mt19937_64 engine_;
};

/// `spec.count` points base + sum t_a u_a over the given direction basis.
std::vector<Vector> sample_affine(std::span<const Rational> base,
                                  const std::vector<Vector>& directions, const SampleSpec& spec);

}  // namespace lpl
