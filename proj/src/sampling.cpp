#include "lpl/sampling.hpp"

namespace lpl {

std::int64_t RationalSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = engine_.max() - engine_.max() % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Rational RationalSampler::next() {
  const auto num = uniform(-1000, 1000);
  const auto den = uniform(1, 1000);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

Vector RationalSampler::point_on(std::span<const Rational> base,
                                 const std::vector<Vector>& directions) {
  Vector x(base.begin(), base.end());
  for (const auto& u : directions) x = axpy(x, next(), u);
  return x;
}

std::vector<Vector> sample_affine(std::span<const Rational> base,
                                  const std::vector<Vector>& directions, const SampleSpec& spec) {
  RationalSampler sampler(spec.seed);
  std::vector<Vector> pts;
  pts.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) pts.push_back(sampler.point_on(base, directions));
  return pts;
}

}  // namespace lpl
