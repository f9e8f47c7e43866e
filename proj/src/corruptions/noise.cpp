#include <algorithm>
#include <cmath>

#include "transforms.hpp"

namespace strb::detail {

namespace {

// Substream tags; stable across releases so regenerated benchmarks match.
constexpr std::uint64_t kGaussianTag = 1;
constexpr std::uint64_t kShotTag = 2;
constexpr std::uint64_t kImpulseMaskTag = 3;
constexpr std::uint64_t kImpulseValueTag = 4;

// Inverse-CDF Poisson draw; one uniform per sample keeps draws indexable.
double poisson_inverse(double lambda, double u) {
  if (lambda <= 0.0) return 0.0;
  double p = std::exp(-lambda);
  double cdf = p;
  double k = 0.0;
  const double limit = lambda + 12.0 * std::sqrt(lambda) + 20.0;
  while (u > cdf && k < limit) {
    k += 1.0;
    p *= lambda / k;
    cdf += p;
  }
  return k;
}

}  // namespace

FloatImage gaussian_noise(const FloatImage& x, const GaussianNoiseParams& p,
                          const RandomStream& rng) {
  const RandomStream noise = rng.substream(kGaussianTag);
  FloatImage out = x;
  auto s = out.samples();
  const std::size_t n = s.size();
  const auto sigma = static_cast<float>(p.sigma);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    s[i] += sigma * static_cast<float>(noise.normal_at(i));
  return out;
}

FloatImage shot_noise(const FloatImage& x, const ShotNoiseParams& p,
                      const RandomStream& rng) {
  const RandomStream noise = rng.substream(kShotTag);
  FloatImage out = x;
  auto s = out.samples();
  const std::size_t n = s.size();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = std::max(0.0, static_cast<double>(s[i])) * p.photons;
    s[i] = static_cast<float>(poisson_inverse(lambda, noise.uniform_at(i)) / p.photons);
  }
  return out;
}

FloatImage impulse_noise(const FloatImage& x, const ImpulseNoiseParams& p,
                         const RandomStream& rng) {
  const RandomStream mask = rng.substream(kImpulseMaskTag);
  const RandomStream value = rng.substream(kImpulseValueTag);
  FloatImage out = x;
  auto s = out.samples();
  const std::size_t n = s.size();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    if (mask.uniform_at(i) < p.amount) s[i] = value.uniform_at(i) < 0.5 ? 0.0f : 1.0f;
  return out;
}

}  // namespace strb::detail
