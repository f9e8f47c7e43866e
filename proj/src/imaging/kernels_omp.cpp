// OpenMP kernels. Border folding is hoisted into per-axis index tables and
// rows are distributed across threads; the per-sample accumulation order
// matches the serial reference exactly, so outputs are bit-identical to it.

#include <algorithm>
#include <cmath>
#include <vector>

#include "strb/kernels.hpp"

namespace strb {

namespace {

// Folded source index for each (output position, tap) pair, tap-major per
// position.
std::vector<int> fold_table(int n, int taps) {
  const int r = taps / 2;
  std::vector<int> table(static_cast<std::size_t>(n) * taps);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < taps; ++k) table[i * taps + k] = reflect101(i + k - r, n);
  return table;
}

struct AxisSamples {
  std::vector<int> i0, i1;
  std::vector<float> frac;
};

AxisSamples clamped_axis(int src_n, int dst_n) {
  AxisSamples a;
  a.i0.resize(dst_n);
  a.i1.resize(dst_n);
  a.frac.resize(dst_n);
  const double scale = static_cast<double>(src_n) / dst_n;
  for (int i = 0; i < dst_n; ++i) {
    double f = (i + 0.5) * scale - 0.5;
    f = std::clamp(f, 0.0, static_cast<double>(src_n - 1));
    a.i0[i] = static_cast<int>(f);
    a.i1[i] = std::min(a.i0[i] + 1, src_n - 1);
    a.frac[i] = static_cast<float>(f - a.i0[i]);
  }
  return a;
}

}  // namespace

namespace kernels::parallel {

FloatImage convolve(const FloatImage& src, const Kernel2D& kernel) {
  const int w = src.width(), h = src.height();
  const int kw = kernel.width, kh = kernel.height;
  const auto cols = fold_table(w, kw);
  const auto rows = fold_table(h, kh);
  // Zero taps contribute exactly nothing; skipping them keeps the remaining
  // accumulation order identical to the reference.
  struct Tap {
    int ky, kx;
    float weight;
  };
  std::vector<Tap> taps;
  for (int ky = 0; ky < kh; ++ky)
    for (int kx = 0; kx < kw; ++kx)
      if (kernel.at(kx, ky) != 0.0f) taps.push_back({ky, kx, kernel.at(kx, ky)});
  FloatImage out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    float* dst = out.row(y);
    const int* ys = &rows[static_cast<std::size_t>(y) * kh];
    for (int x = 0; x < w; ++x) {
      const int* xs = &cols[static_cast<std::size_t>(x) * kw];
      float acc[kChannels] = {0.0f, 0.0f, 0.0f};
      for (const Tap& t : taps) {
        const float* s = src.row(ys[t.ky]) + xs[t.kx] * kChannels;
        for (int c = 0; c < kChannels; ++c) acc[c] += t.weight * s[c];
      }
      for (int c = 0; c < kChannels; ++c) dst[x * kChannels + c] = acc[c];
    }
  }
  return out;
}

FloatImage convolve_separable(const FloatImage& src,
                              std::span<const float> horizontal,
                              std::span<const float> vertical) {
  const int w = src.width(), h = src.height();
  const int hn = static_cast<int>(horizontal.size());
  const int vn = static_cast<int>(vertical.size());
  const auto cols = fold_table(w, hn);
  const auto rows = fold_table(h, vn);
  FloatImage tmp(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* srow = src.row(y);
    float* dst = tmp.row(y);
    for (int x = 0; x < w; ++x) {
      const int* xs = &cols[static_cast<std::size_t>(x) * hn];
      for (int c = 0; c < kChannels; ++c) {
        float acc = 0.0f;
        for (int k = 0; k < hn; ++k) acc += horizontal[k] * srow[xs[k] * kChannels + c];
        dst[x * kChannels + c] = acc;
      }
    }
  }
  FloatImage out(w, h);
  const int row_len = w * kChannels;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    float* dst = out.row(y);
    const int* ys = &rows[static_cast<std::size_t>(y) * vn];
    for (int i = 0; i < row_len; ++i) {
      float acc = 0.0f;
      for (int k = 0; k < vn; ++k) acc += vertical[k] * tmp.row(ys[k])[i];
      dst[i] = acc;
    }
  }
  return out;
}

FloatImage resize_bilinear(const FloatImage& src, int new_width,
                           int new_height) {
  FloatImage out(new_width, new_height);
  const auto ax = clamped_axis(src.width(), new_width);
  const auto ay = clamped_axis(src.height(), new_height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < new_height; ++y) {
    const float* r0 = src.row(ay.i0[y]);
    const float* r1 = src.row(ay.i1[y]);
    const float wy = ay.frac[y];
    float* dst = out.row(y);
    for (int x = 0; x < new_width; ++x) {
      const int x0 = ax.i0[x] * kChannels, x1 = ax.i1[x] * kChannels;
      const float wx = ax.frac[x];
      for (int c = 0; c < kChannels; ++c) {
        const float top = r0[x0 + c] * (1.0f - wx) + r0[x1 + c] * wx;
        const float bottom = r1[x0 + c] * (1.0f - wx) + r1[x1 + c] * wx;
        dst[x * kChannels + c] = top * (1.0f - wy) + bottom * wy;
      }
    }
  }
  return out;
}

FloatImage remap_bilinear(const FloatImage& src, const Plane& map_x,
                          const Plane& map_y) {
  const int w = src.width(), h = src.height();
  FloatImage out(map_x.width(), map_x.height());
#pragma omp parallel for schedule(static)
  for (int y = 0; y < out.height(); ++y) {
    float* dst = out.row(y);
    for (int x = 0; x < out.width(); ++x) {
      const float fx = map_x.at(x, y), fy = map_y.at(x, y);
      const int x0 = static_cast<int>(std::floor(fx));
      const int y0 = static_cast<int>(std::floor(fy));
      const float wx = fx - static_cast<float>(x0);
      const float wy = fy - static_cast<float>(y0);
      const int xa = reflect101(x0, w) * kChannels;
      const int xb = reflect101(x0 + 1, w) * kChannels;
      const float* ra = src.row(reflect101(y0, h));
      const float* rb = src.row(reflect101(y0 + 1, h));
      for (int c = 0; c < kChannels; ++c) {
        const float top = ra[xa + c] * (1.0f - wx) + ra[xb + c] * wx;
        const float bottom = rb[xa + c] * (1.0f - wx) + rb[xb + c] * wx;
        dst[x * kChannels + c] = top * (1.0f - wy) + bottom * wy;
      }
    }
  }
  return out;
}

FloatImage blend(const FloatImage& a, const FloatImage& b, float alpha) {
  FloatImage out(a.width(), a.height());
  const auto sa = a.samples();
  const auto sb = b.samples();
  auto so = out.samples();
  const std::size_t n = sa.size();
  const float beta = 1.0f - alpha;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) so[i] = sa[i] * alpha + sb[i] * beta;
  return out;
}

Plane blur_plane(const Plane& src, std::span<const float> taps) {
  const int w = src.width(), h = src.height();
  const int n = static_cast<int>(taps.size());
  const auto cols = fold_table(w, n);
  const auto rows = fold_table(h, n);
  Plane tmp(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int* xs = &cols[static_cast<std::size_t>(x) * n];
      float acc = 0.0f;
      for (int k = 0; k < n; ++k) acc += taps[k] * src.at(xs[k], y);
      tmp.at(x, y) = acc;
    }
  }
  Plane out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const int* ys = &rows[static_cast<std::size_t>(y) * n];
    for (int x = 0; x < w; ++x) {
      float acc = 0.0f;
      for (int k = 0; k < n; ++k) acc += taps[k] * tmp.at(x, ys[k]);
      out.at(x, y) = acc;
    }
  }
  return out;
}

}  // namespace kernels::parallel

std::vector<float> gaussian_taps(double sigma) {
  if (sigma <= 0.0) return {1.0f};
  const int r = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> w(2 * r + 1);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    w[i + r] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += w[i + r];
  }
  std::vector<float> taps(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) taps[i] = static_cast<float>(w[i] / sum);
  return taps;
}

double sum_squared_difference(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b, int row_length) {
  const int rows = static_cast<int>(a.size() / row_length);
  std::vector<double> partial(rows, 0.0);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    std::uint64_t acc = 0;
    const std::size_t base = static_cast<std::size_t>(r) * row_length;
    for (int i = 0; i < row_length; ++i) {
      const int d = static_cast<int>(a[base + i]) - static_cast<int>(b[base + i]);
      acc += static_cast<std::uint64_t>(d * d);
    }
    partial[r] = static_cast<double>(acc);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace strb
