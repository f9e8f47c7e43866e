#include <algorithm>
#include <cmath>
#include <vector>

#include "procedural.hpp"
#include "strb/image_io.hpp"
#include "transforms.hpp"

namespace strb::detail {

namespace {

constexpr std::uint64_t kDirtyBlobTagBase = 100;
constexpr std::uint64_t kLinesStrokeTagBase = 200;

struct AxisWeights {
  std::vector<int> first;
  std::vector<std::vector<float>> weights;
};

// Box (area-average) resampling weights from n source cells to m < n cells.
AxisWeights area_weights(int n, int m) {
  AxisWeights a;
  a.first.resize(m);
  a.weights.resize(m);
  const double scale = static_cast<double>(n) / m;
  for (int i = 0; i < m; ++i) {
    const double lo = i * scale, hi = (i + 1) * scale;
    const int j0 = static_cast<int>(std::floor(lo));
    const int j1 = std::min(n, static_cast<int>(std::ceil(hi)));
    a.first[i] = j0;
    for (int j = j0; j < j1; ++j) {
      const double overlap = std::min(hi, j + 1.0) - std::max(lo, static_cast<double>(j));
      a.weights[i].push_back(static_cast<float>(overlap / scale));
    }
  }
  return a;
}

float smoothstep(float e0, float e1, float v) {
  const float t = std::clamp((v - e0) / (e1 - e0), 0.0f, 1.0f);
  return t * t * (3.0f - 2.0f * t);
}

std::array<float, 3> hue_to_rgb(double hue) {
  const double h6 = hue * 6.0;
  const int sector = static_cast<int>(h6) % 6;
  const auto f = static_cast<float>(h6 - std::floor(h6));
  switch (sector) {
    case 0: return {1.0f, f, 0.0f};
    case 1: return {1.0f - f, 1.0f, 0.0f};
    case 2: return {0.0f, 1.0f, f};
    case 3: return {0.0f, 1.0f - f, 1.0f};
    case 4: return {f, 0.0f, 1.0f};
    default: return {1.0f, 0.0f, 1.0f - f};
  }
}

Point border_point(int side, double t, int w, int h) {
  switch (side) {
    case 0: return {t * w, 0.0};
    case 1: return {static_cast<double>(w), t * h};
    case 2: return {t * w, static_cast<double>(h)};
    default: return {0.0, t * h};
  }
}

double segment_distance(double px, double py, const Point& a, const Point& b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? ((px - a.x) * vx + (py - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = px - (a.x + t * vx), dy = py - (a.y + t * vy);
  return std::sqrt(dx * dx + dy * dy);
}

struct Blob {
  double cx, cy, radius;
  std::array<float, 3> color;
  RandomStream shape{0};
};

}  // namespace

FloatImage brightness(const FloatImage& x, const BrightnessParams& p) {
  FloatImage out = x;
  const int n = x.width() * x.height();
  auto s = out.samples();
  const auto shift = static_cast<float>(p.shift);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    float* px = &s[static_cast<std::size_t>(i) * kChannels];
    // Raising V with hue and saturation fixed scales all channels together.
    const float v = std::max({px[0], px[1], px[2]});
    const float v_new = std::min(1.0f, v + shift);
    if (v > 0.0f) {
      const float k = v_new / v;
      for (int c = 0; c < kChannels; ++c) px[c] *= k;
    } else {
      for (int c = 0; c < kChannels; ++c) px[c] = v_new;
    }
  }
  return out;
}

FloatImage contrast(const FloatImage& x, const ContrastParams& p) {
  const int w = x.width(), h = x.height();
  std::vector<double> row_sums(static_cast<std::size_t>(h) * kChannels, 0.0);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* r = x.row(y);
    for (int xx = 0; xx < w; ++xx)
      for (int c = 0; c < kChannels; ++c) row_sums[y * kChannels + c] += r[xx * kChannels + c];
  }
  float mean[kChannels];
  for (int c = 0; c < kChannels; ++c) {
    double total = 0.0;
    for (int y = 0; y < h; ++y) total += row_sums[y * kChannels + c];
    mean[c] = static_cast<float>(total / (static_cast<double>(w) * h));
  }
  FloatImage out = x;
  auto s = out.samples();
  const auto factor = static_cast<float>(p.factor);
  const std::size_t n = s.size();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const float m = mean[i % kChannels];
    s[i] = (s[i] - m) * factor + m;
  }
  return out;
}

FloatImage pixelate(const FloatImage& x, const PixelateParams& p) {
  const int w = x.width(), h = x.height();
  const int sw = std::max(1, static_cast<int>(std::floor(w * p.factor)));
  const int sh = std::max(1, static_cast<int>(std::floor(h * p.factor)));
  const AxisWeights ax = area_weights(w, sw);
  const AxisWeights ay = area_weights(h, sh);

  FloatImage small(sw, sh);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < sh; ++y)
    for (int xx = 0; xx < sw; ++xx)
      for (int c = 0; c < kChannels; ++c) {
        float acc = 0.0f;
        for (std::size_t j = 0; j < ay.weights[y].size(); ++j) {
          float row_acc = 0.0f;
          const int sy = ay.first[y] + static_cast<int>(j);
          for (std::size_t i = 0; i < ax.weights[xx].size(); ++i)
            row_acc += ax.weights[xx][i] * x.at(ax.first[xx] + static_cast<int>(i), sy, c);
          acc += ay.weights[y][j] * row_acc;
        }
        small.at(xx, y, c) = acc;
      }

  FloatImage out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const int sy = std::min(sh - 1, static_cast<int>((y + 0.5) * sh / h));
    for (int xx = 0; xx < w; ++xx) {
      const int sx = std::min(sw - 1, static_cast<int>((xx + 0.5) * sw / w));
      for (int c = 0; c < kChannels; ++c) out.at(xx, y, c) = small.at(sx, sy, c);
    }
  }
  return out;
}

ImageBuffer jpeg(const ImageBuffer& img, const JpegParams& p) {
  return jpeg_round_trip(img, p.quality);
}

FloatImage dirty(const FloatImage& x, const DirtyParams& p, const RandomStream& rng) {
  const int w = x.width(), h = x.height();
  const double side = std::min(w, h);
  std::vector<Blob> blobs;
  blobs.reserve(p.blob_count);
  for (int k = 0; k < p.blob_count; ++k) {
    RandomStream b = rng.substream(kDirtyBlobTagBase + k);
    Blob blob{};
    blob.cx = b.next_uniform() * w;
    blob.cy = b.next_uniform() * h;
    blob.radius = std::max(1.0, side * b.next_uniform(p.radius_min_frac, p.radius_max_frac));
    const bool dark = b.next_bool();
    const double shade = b.next_uniform();
    if (dark) {
      const auto g = static_cast<float>(0.08 + 0.2 * shade);
      blob.color = {g, g * 0.85f, g * 0.65f};
    } else {
      const auto g = static_cast<float>(0.78 + 0.17 * shade);
      blob.color = {g, g * 0.97f, g * 0.9f};
    }
    blob.shape = b.substream(7);
    blobs.push_back(blob);
  }

  FloatImage out = x;
  if (p.opacity <= 0.0) return out;
  const auto opacity = static_cast<float>(p.opacity);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    float* row = out.row(y);
    const double py = y + 0.5;
    for (const Blob& blob : blobs) {
      const double reach = 1.3 * blob.radius;
      if (std::abs(py - blob.cy) > reach) continue;
      const int x0 = std::max(0, static_cast<int>(std::floor(blob.cx - reach)));
      const int x1 = std::min(w - 1, static_cast<int>(std::ceil(blob.cx + reach)));
      for (int xx = x0; xx <= x1; ++xx) {
        const double px = xx + 0.5;
        const double d = std::hypot(px - blob.cx, py - blob.cy) / blob.radius;
        if (d > 1.3) continue;
        const double n = value_noise_at(blob.shape, px, py, blob.radius * 0.5, 3, 0.5);
        const auto field = static_cast<float>((1.0 - d) + 0.6 * (n - 0.5));
        const float alpha = opacity * smoothstep(0.0f, 0.12f, field);
        if (alpha <= 0.0f) continue;
        for (int c = 0; c < kChannels; ++c) {
          float& v = row[xx * kChannels + c];
          v = v * (1.0f - alpha) + blob.color[c] * alpha;
        }
      }
    }
  }
  return out;
}

FloatImage lines(const FloatImage& x, const LinesParams& p, const RandomStream& rng,
                 std::vector<Stroke>* strokes_out) {
  const int w = x.width(), h = x.height();
  const double max_width =
      std::max(p.width_min_px, p.width_max_frac * std::min(w, h));
  std::vector<Stroke> strokes;
  strokes.reserve(p.stroke_count);
  for (int k = 0; k < p.stroke_count; ++k) {
    RandomStream s = rng.substream(kLinesStrokeTagBase + k);
    const int side_a = static_cast<int>(s.next_below(4));
    const int side_b = (side_a + 1 + static_cast<int>(s.next_below(3))) % 4;
    Stroke stroke;
    stroke.from = border_point(side_a, s.next_uniform(), w, h);
    stroke.to = border_point(side_b, s.next_uniform(), w, h);
    stroke.width = s.next_uniform(p.width_min_px, max_width);
    if (s.next_bool()) {
      const auto g = static_cast<float>(0.15 * s.next_uniform());
      stroke.color = {g, g, g};
    } else {
      stroke.color = hue_to_rgb(s.next_uniform());
    }
    strokes.push_back(stroke);
  }

  FloatImage out = x;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    float* row = out.row(y);
    const double py = y + 0.5;
    for (const Stroke& s : strokes) {
      const double reach = s.width / 2.0 + 0.5;
      if (py < std::min(s.from.y, s.to.y) - reach || py > std::max(s.from.y, s.to.y) + reach)
        continue;
      for (int xx = 0; xx < w; ++xx) {
        const double px = xx + 0.5;
        const double d = segment_distance(px, py, s.from, s.to);
        const auto coverage = static_cast<float>(std::clamp(reach - d, 0.0, 1.0));
        if (coverage <= 0.0f) continue;
        for (int c = 0; c < kChannels; ++c) {
          float& v = row[xx * kChannels + c];
          v = v * (1.0f - coverage) + s.color[c] * coverage;
        }
      }
    }
  }
  if (strokes_out) *strokes_out = std::move(strokes);
  return out;
}

}  // namespace strb::detail
