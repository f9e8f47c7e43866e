#pragma once

// Float raster kernels. Each kernel exists twice: a direct serial reference
// used by the tests and the benchmark, and the OpenMP version the rest of the
// toolkit calls. Every output sample of the parallel version is computed by
// one thread with a fixed operation order, so results do not depend on the
// thread count.

#include <span>
#include <vector>

#include "strb/image.hpp"

namespace strb {

/// Dense 2-D filter, row-major, odd width and height.
struct Kernel2D {
  int width = 1;
  int height = 1;
  std::vector<float> weights{1.0f};

  float at(int x, int y) const { return weights[y * width + x]; }
};

/// Reflect-101 index folding (…2 1 | 0 1 2 … n-1 | n-2 …).
inline int reflect101(int i, int n) noexcept {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

namespace kernels {

namespace serial {

FloatImage convolve(const FloatImage& src, const Kernel2D& kernel);
FloatImage convolve_separable(const FloatImage& src,
                              std::span<const float> horizontal,
                              std::span<const float> vertical);
FloatImage resize_bilinear(const FloatImage& src, int new_width, int new_height);
/// out(x, y) = bilinear sample of src at (map_x(x, y), map_y(x, y)) with
/// reflect-101 borders. Coordinates are in pixel-center units.
FloatImage remap_bilinear(const FloatImage& src, const Plane& map_x,
                          const Plane& map_y);
FloatImage blend(const FloatImage& a, const FloatImage& b, float alpha);
Plane blur_plane(const Plane& src, std::span<const float> taps);

}  // namespace serial

namespace parallel {

FloatImage convolve(const FloatImage& src, const Kernel2D& kernel);
FloatImage convolve_separable(const FloatImage& src,
                              std::span<const float> horizontal,
                              std::span<const float> vertical);
FloatImage resize_bilinear(const FloatImage& src, int new_width, int new_height);
FloatImage remap_bilinear(const FloatImage& src, const Plane& map_x,
                          const Plane& map_y);
FloatImage blend(const FloatImage& a, const FloatImage& b, float alpha);
Plane blur_plane(const Plane& src, std::span<const float> taps);

}  // namespace parallel

}  // namespace kernels

/// Normalized 1-D Gaussian taps with radius ceil(3 * sigma).
std::vector<float> gaussian_taps(double sigma);

/// Sum of squared differences, reduced per row and then in row order.
double sum_squared_difference(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b, int row_length);

}  // namespace strb
