#include <algorithm>
#include <cmath>

#include "procedural.hpp"
#include "transforms.hpp"

namespace strb::detail {

namespace {

constexpr std::uint64_t kSnowFlakeTag = 21;
constexpr std::uint64_t kSnowAngleTag = 22;
constexpr std::uint64_t kFrostTag = 31;
constexpr std::uint64_t kFogTag = 41;

}  // namespace

FloatImage snow(const FloatImage& x, const SnowParams& p, const RandomStream& rng) {
  const int w = x.width(), h = x.height();
  const int gw = std::max(1, (w + 1) / 2), gh = std::max(1, (h + 1) / 2);
  const RandomStream flake_rng = rng.substream(kSnowFlakeTag);
  Plane coarse(gw, gh);
  for (int i = 0; i < gw * gh; ++i)
    coarse.values()[i] = static_cast<float>(p.flake_mean + p.flake_std * flake_rng.normal_at(i));
  Plane flakes = resize_plane(coarse, w, h);
  for (float& v : flakes.values())
    if (v < p.threshold) v = 0.0f;
  const double angle = -135.0 + 90.0 * rng.substream(kSnowAngleTag).uniform_at(0);
  flakes = convolve_plane(flakes, motion_kernel(p.motion_length, p.motion_sigma, angle));

  FloatImage out(w, h);
  const auto keep = static_cast<float>(p.image_weight);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* src = x.row(y);
    float* dst = out.row(y);
    for (int xx = 0; xx < w; ++xx) {
      const float* px = src + xx * kChannels;
      const float gray = 0.299f * px[0] + 0.587f * px[1] + 0.114f * px[2];
      const float snow_cover = flakes.at(xx, y) + flakes.at(w - 1 - xx, h - 1 - y);
      for (int c = 0; c < kChannels; ++c) {
        const float lifted = std::max(px[c], gray * 1.5f + 0.5f);
        dst[xx * kChannels + c] = keep * px[c] + (1.0f - keep) * lifted + snow_cover;
      }
    }
  }
  return out;
}

FloatImage frost(const FloatImage& x, const FrostParams& p, const RandomStream& rng) {
  const int w = x.width(), h = x.height();
  const double cell = std::max(4.0, std::min(w, h) / 3.0);
  const Plane noise = value_noise(w, h, rng.substream(kFrostTag), cell, 6, 0.6);
  constexpr float kTint[3] = {0.86f, 0.93f, 1.0f};
  const auto opacity = static_cast<float>(p.opacity);
  FloatImage out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* src = x.row(y);
    float* dst = out.row(y);
    for (int xx = 0; xx < w; ++xx) {
      // Ridged noise gives the branching crystal look.
      const float ridge = 1.0f - std::abs(2.0f * noise.at(xx, y) - 1.0f);
      const float ice = 0.35f + 0.65f * ridge * ridge;
      for (int c = 0; c < kChannels; ++c) {
        dst[xx * kChannels + c] =
            (1.0f - opacity) * src[xx * kChannels + c] + opacity * ice * kTint[c];
      }
    }
  }
  return out;
}

FloatImage fog(const FloatImage& x, const FogParams& p, const RandomStream& rng) {
  const int w = x.width(), h = x.height();
  const Plane haze = plasma_fractal(w, h, rng.substream(kFogTag), p.decay);
  float peak = 0.0f;
  for (float v : x.samples()) peak = std::max(peak, v);
  const auto strength = static_cast<float>(p.strength);
  const float scale = peak / (peak + strength);
  FloatImage out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* src = x.row(y);
    float* dst = out.row(y);
    for (int xx = 0; xx < w; ++xx) {
      const float lift = strength * haze.at(xx, y);
      for (int c = 0; c < kChannels; ++c)
        dst[xx * kChannels + c] = (src[xx * kChannels + c] + lift) * scale;
    }
  }
  return out;
}

}  // namespace strb::detail
