#include <cmath>
#include <numbers>

#include "procedural.hpp"
#include "strb/corruptions.hpp"
#include "transforms.hpp"

namespace strb {

namespace {

constexpr std::uint64_t kRotationSignTag = 51;
constexpr std::uint64_t kElasticXTag = 61;
constexpr std::uint64_t kElasticYTag = 62;

// Sub-nanopixel slack so exact integer extents are not rounded up by one.
constexpr double kExtentSlack = 1e-9;

}  // namespace

RotationGeometry rotation_geometry(int width, int height, double angle_deg) {
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta), s = std::sin(theta);
  const double exact_w = width * std::abs(c) + height * std::abs(s);
  const double exact_h = width * std::abs(s) + height * std::abs(c);
  RotationGeometry g;
  g.width = std::max(1, static_cast<int>(std::ceil(exact_w - kExtentSlack)));
  g.height = std::max(1, static_cast<int>(std::ceil(exact_h - kExtentSlack)));
  const double cx = width / 2.0, cy = height / 2.0;
  const double ncx = g.width / 2.0, ncy = g.height / 2.0;
  g.forward.m = {c, -s, ncx - (c * cx - s * cy), s, c, ncy - (s * cx + c * cy)};
  return g;
}

CorruptionResult corrupt_rotation(const ImageBuffer& img,
                                  const RotationParams& params) {
  const RotationGeometry g = rotation_geometry(img.width(), img.height(), params.angle_deg);
  if (g.forward.is_identity() && g.width == img.width() && g.height == img.height()) {
    return {img, Affine2D::identity()};
  }
  const auto& m = g.forward.m;
  // Inverse of the rotation block is its transpose.
  Plane map_x(g.width, g.height), map_y(g.width, g.height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      const double dx = x + 0.5 - m[2], dy = y + 0.5 - m[5];
      const double sx = m[0] * dx + m[3] * dy;
      const double sy = m[1] * dx + m[4] * dy;
      map_x.at(x, y) = static_cast<float>(sx - 0.5);
      map_y.at(x, y) = static_cast<float>(sy - 0.5);
    }
  FloatImage rotated = kernels::parallel::remap_bilinear(to_float(img), map_x, map_y);
  return {quantize(rotated), g.forward};
}

CorruptionResult corrupt_rotation(const ImageBuffer& img, int severity,
                                  const SeedSpec& seed) {
  RotationParams params = rotation_params(severity);
  const RandomStream rng = corruption_stream(seed);
  if (rng.substream(kRotationSignTag).uniform_at(0) < 0.5) params.angle_deg = -params.angle_deg;
  return corrupt_rotation(img, params);
}

namespace detail {

FloatImage elastic(const FloatImage& x, const ElasticParams& p, const RandomStream& rng) {
  const int w = x.width(), h = x.height();
  const double side = std::min(w, h);
  const auto taps = gaussian_taps(p.sigma * side / 100.0);
  const double target_rms = p.alpha * side / 1000.0;

  auto field = [&](std::uint64_t tag) {
    const RandomStream r = rng.substream(tag);
    Plane raw(w, h);
    auto v = raw.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<float>(2.0 * r.uniform_at(i) - 1.0);
    Plane smooth = kernels::parallel::blur_plane(raw, taps);
    double sq = 0.0;
    for (float s : smooth.values()) sq += static_cast<double>(s) * s;
    const double rms = std::sqrt(sq / static_cast<double>(smooth.values().size()));
    const auto scale = static_cast<float>(rms > 0.0 ? target_rms / rms : 0.0);
    for (float& s : smooth.values()) s *= scale;
    return smooth;
  };
  const Plane dx = field(kElasticXTag);
  const Plane dy = field(kElasticYTag);

  Plane map_x(w, h), map_y(w, h);
  for (int y = 0; y < h; ++y)
    for (int xx = 0; xx < w; ++xx) {
      map_x.at(xx, y) = static_cast<float>(xx) + dx.at(xx, y);
      map_y.at(xx, y) = static_cast<float>(y) + dy.at(xx, y);
    }
  return kernels::parallel::remap_bilinear(x, map_x, map_y);
}

}  // namespace detail

}  // namespace strb
