// Direct reference implementations: one output sample at a time, border
// folding evaluated per tap.

#include <algorithm>
#include <cmath>

#include "strb/error.hpp"
#include "strb/kernels.hpp"

namespace strb::kernels::serial {

namespace {

float bilinear_reflect(const FloatImage& src, float x, float y, int c) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const float fx = x - static_cast<float>(x0);
  const float fy = y - static_cast<float>(y0);
  const int w = src.width();
  const int h = src.height();
  const int xa = reflect101(x0, w), xb = reflect101(x0 + 1, w);
  const int ya = reflect101(y0, h), yb = reflect101(y0 + 1, h);
  const float top = src.at(xa, ya, c) * (1.0f - fx) + src.at(xb, ya, c) * fx;
  const float bottom = src.at(xa, yb, c) * (1.0f - fx) + src.at(xb, yb, c) * fx;
  return top * (1.0f - fy) + bottom * fy;
}

}  // namespace

FloatImage convolve(const FloatImage& src, const Kernel2D& kernel) {
  const int w = src.width(), h = src.height();
  const int rx = kernel.width / 2, ry = kernel.height / 2;
  FloatImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < kChannels; ++c) {
        float acc = 0.0f;
        for (int ky = 0; ky < kernel.height; ++ky) {
          const int sy = reflect101(y + ky - ry, h);
          for (int kx = 0; kx < kernel.width; ++kx) {
            const int sx = reflect101(x + kx - rx, w);
            acc += kernel.at(kx, ky) * src.at(sx, sy, c);
          }
        }
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

FloatImage convolve_separable(const FloatImage& src,
                              std::span<const float> horizontal,
                              std::span<const float> vertical) {
  const int w = src.width(), h = src.height();
  const int rx = static_cast<int>(horizontal.size()) / 2;
  const int ry = static_cast<int>(vertical.size()) / 2;
  FloatImage tmp(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < kChannels; ++c) {
        float acc = 0.0f;
        for (int k = 0; k < static_cast<int>(horizontal.size()); ++k)
          acc += horizontal[k] * src.at(reflect101(x + k - rx, w), y, c);
        tmp.at(x, y, c) = acc;
      }
  FloatImage out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < kChannels; ++c) {
        float acc = 0.0f;
        for (int k = 0; k < static_cast<int>(vertical.size()); ++k)
          acc += vertical[k] * tmp.at(x, reflect101(y + k - ry, h), c);
        out.at(x, y, c) = acc;
      }
  return out;
}

FloatImage resize_bilinear(const FloatImage& src, int new_width,
                           int new_height) {
  FloatImage out(new_width, new_height);
  const int w = src.width(), h = src.height();
  const double sx = static_cast<double>(w) / new_width;
  const double sy = static_cast<double>(h) / new_height;
  for (int y = 0; y < new_height; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(h - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, h - 1);
    const float wy = static_cast<float>(fy - y0);
    for (int x = 0; x < new_width; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(w - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, w - 1);
      const float wx = static_cast<float>(fx - x0);
      for (int c = 0; c < kChannels; ++c) {
        const float top = src.at(x0, y0, c) * (1.0f - wx) + src.at(x1, y0, c) * wx;
        const float bottom =
            src.at(x0, y1, c) * (1.0f - wx) + src.at(x1, y1, c) * wx;
        out.at(x, y, c) = top * (1.0f - wy) + bottom * wy;
      }
    }
  }
  return out;
}

FloatImage remap_bilinear(const FloatImage& src, const Plane& map_x,
                          const Plane& map_y) {
  FloatImage out(map_x.width(), map_x.height());
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x)
      for (int c = 0; c < kChannels; ++c)
        out.at(x, y, c) = bilinear_reflect(src, map_x.at(x, y), map_y.at(x, y), c);
  return out;
}

FloatImage blend(const FloatImage& a, const FloatImage& b, float alpha) {
  FloatImage out(a.width(), a.height());
  for (std::size_t i = 0; i < a.sample_count(); ++i)
    out.samples()[i] = a.samples()[i] * alpha + b.samples()[i] * (1.0f - alpha);
  return out;
}

Plane blur_plane(const Plane& src, std::span<const float> taps) {
  const int w = src.width(), h = src.height();
  const int r = static_cast<int>(taps.size()) / 2;
  Plane tmp(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      float acc = 0.0f;
      for (int k = 0; k < static_cast<int>(taps.size()); ++k)
        acc += taps[k] * src.at(reflect101(x + k - r, w), y);
      tmp.at(x, y) = acc;
    }
  Plane out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      float acc = 0.0f;
      for (int k = 0; k < static_cast<int>(taps.size()); ++k)
        acc += taps[k] * tmp.at(x, reflect101(y + k - r, h));
      out.at(x, y) = acc;
    }
  return out;
}

}  // namespace strb::kernels::serial
