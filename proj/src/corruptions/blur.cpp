#include <algorithm>
#include <cmath>
#include <utility>

#include "procedural.hpp"
#include "transforms.hpp"

namespace strb::detail {

namespace {

constexpr std::uint64_t kGlassTag = 11;
constexpr std::uint64_t kMotionTag = 12;

FloatImage zoom_about_center(const FloatImage& x, double zoom) {
  const int w = x.width(), h = x.height();
  const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
  Plane mx(w, h), my(w, h);
  for (int y = 0; y < h; ++y)
    for (int xx = 0; xx < w; ++xx) {
      mx.at(xx, y) = static_cast<float>(cx + (xx - cx) / zoom);
      my.at(xx, y) = static_cast<float>(cy + (y - cy) / zoom);
    }
  return kernels::parallel::remap_bilinear(x, mx, my);
}

}  // namespace

FloatImage defocus_blur(const FloatImage& x, const DefocusParams& p) {
  return kernels::parallel::convolve(x, disc_kernel(p.radius, p.alias_sigma));
}

FloatImage glass_blur(const FloatImage& x, const GlassParams& p,
                      const RandomStream& rng) {
  const RandomStream swaps = rng.substream(kGlassTag);
  FloatImage y = gaussian_blur(x, p.sigma);
  const int w = y.width(), h = y.height(), d = p.max_delta;
  // Swaps are order dependent, so this pass stays sequential; the draws are
  // indexed by (iteration, pixel) so shorter runs are prefixes of longer ones.
  for (int it = 0; it < p.iterations; ++it) {
    for (int yy = h - 1 - d; yy >= d; --yy) {
      for (int xx = w - 1 - d; xx >= d; --xx) {
        const std::uint64_t idx =
            (static_cast<std::uint64_t>(it) * h + yy) * static_cast<std::uint64_t>(w) + xx;
        const int dx = static_cast<int>(swaps.uniform_at(2 * idx) * 2 * d) - d;
        const int dy = static_cast<int>(swaps.uniform_at(2 * idx + 1) * 2 * d) - d;
        for (int c = 0; c < kChannels; ++c)
          std::swap(y.at(xx, yy, c), y.at(xx + dx, yy + dy, c));
      }
    }
  }
  return gaussian_blur(y, p.sigma);
}

FloatImage motion_blur(const FloatImage& x, const MotionParams& p,
                       const RandomStream& rng) {
  const double angle = -45.0 + 90.0 * rng.substream(kMotionTag).uniform_at(0);
  return kernels::parallel::convolve(x, motion_kernel(p.length, p.sigma, angle));
}

FloatImage zoom_blur(const FloatImage& x, const ZoomParams& p) {
  FloatImage acc = x;
  int terms = 1;
  for (int k = 0;; ++k) {
    const double z = 1.0 + k * p.step;
    if (z >= p.max_zoom - 1e-9) break;
    const FloatImage zoomed = zoom_about_center(x, z);
    auto a = acc.samples();
    const auto b = zoomed.samples();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    ++terms;
  }
  const float inv = 1.0f / static_cast<float>(terms);
  for (float& v : acc.samples()) v *= inv;
  return acc;
}

}  // namespace strb::detail
