#include "procedural.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace strb::detail {

namespace {

double lattice(const RandomStream& rng, std::int64_t ix, std::int64_t iy, int octave) {
  const std::uint64_t h = mix64(static_cast<std::uint64_t>(ix) * 0x9E3779B97F4A7C15ULL ^
                                mix64(static_cast<std::uint64_t>(iy) + 0xD1B54A32D192ED03ULL) ^
                                static_cast<std::uint64_t>(octave) << 56);
  return rng.uniform_at(h);
}

double quintic(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }

double single_octave(const RandomStream& rng, double x, double y, double cell,
                     int octave) {
  const double gx = x / cell, gy = y / cell;
  const double fx0 = std::floor(gx), fy0 = std::floor(gy);
  const auto ix = static_cast<std::int64_t>(fx0);
  const auto iy = static_cast<std::int64_t>(fy0);
  const double tx = quintic(gx - fx0), ty = quintic(gy - fy0);
  const double v00 = lattice(rng, ix, iy, octave);
  const double v10 = lattice(rng, ix + 1, iy, octave);
  const double v01 = lattice(rng, ix, iy + 1, octave);
  const double v11 = lattice(rng, ix + 1, iy + 1, octave);
  const double top = v00 + (v10 - v00) * tx;
  const double bottom = v01 + (v11 - v01) * tx;
  return top + (bottom - top) * ty;
}

}  // namespace

double value_noise_at(const RandomStream& rng, double x, double y, double cell,
                      int octaves, double persistence) {
  double sum = 0.0, norm = 0.0, amp = 1.0;
  for (int o = 0; o < octaves; ++o) {
    sum += amp * single_octave(rng, x, y, cell, o);
    norm += amp;
    amp *= persistence;
    cell = std::max(1.0, cell * 0.5);
  }
  return sum / norm;
}

Plane value_noise(int width, int height, const RandomStream& rng, double cell,
                  int octaves, double persistence) {
  Plane out(width, height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      out.at(x, y) = static_cast<float>(
          value_noise_at(rng, x + 0.5, y + 0.5, cell, octaves, persistence));
  return out;
}

Plane plasma_fractal(int width, int height, const RandomStream& rng, double decay) {
  int size = 2;
  while (size < width || size < height) size *= 2;
  std::vector<double> map(static_cast<std::size_t>(size) * size, 0.0);
  auto at = [&](int x, int y) -> double& {
    x = ((x % size) + size) % size;
    y = ((y % size) + size) % size;
    return map[static_cast<std::size_t>(y) * size + x];
  };
  std::uint64_t counter = 0;
  auto wobble = [&](double amplitude) {
    return amplitude * (2.0 * rng.uniform_at(counter++) - 1.0);
  };

  double amplitude = 100.0;
  for (int step = size; step >= 2; step /= 2) {
    const int half = step / 2;
    // squares
    for (int y = 0; y < size; y += step)
      for (int x = 0; x < size; x += step) {
        const double mean =
            (at(x, y) + at(x + step, y) + at(x, y + step) + at(x + step, y + step)) / 4.0;
        at(x + half, y + half) = mean + wobble(amplitude);
      }
    // diamonds
    for (int y = 0; y < size; y += step)
      for (int x = 0; x < size; x += step) {
        const double top = (at(x + half, y - half) + at(x + half, y + half) +
                            at(x, y) + at(x + step, y)) / 4.0;
        at(x + half, y) = top + wobble(amplitude);
        const double left = (at(x - half, y + half) + at(x + half, y + half) +
                             at(x, y) + at(x, y + step)) / 4.0;
        at(x, y + half) = left + wobble(amplitude);
      }
    amplitude /= decay;
  }

  double lo = map[0], hi = map[0];
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      lo = std::min(lo, at(x, y));
      hi = std::max(hi, at(x, y));
    }
  Plane out(width, height);
  const double range = hi > lo ? hi - lo : 1.0;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      out.at(x, y) = static_cast<float>((at(x, y) - lo) / range);
  return out;
}

Kernel2D disc_kernel(int radius, double alias_sigma) {
  const int n = 2 * radius + 1;
  std::vector<double> disc(static_cast<std::size_t>(n) * n, 0.0);
  for (int y = -radius; y <= radius; ++y)
    for (int x = -radius; x <= radius; ++x)
      if (x * x + y * y <= radius * radius) disc[(y + radius) * n + (x + radius)] = 1.0;

  const auto taps = gaussian_taps(alias_sigma);
  const int tr = static_cast<int>(taps.size()) / 2;
  const int m = n + 2 * tr;
  std::vector<double> soft(static_cast<std::size_t>(m) * m, 0.0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const double v = disc[y * n + x];
      if (v == 0.0) continue;
      for (int ky = 0; ky < static_cast<int>(taps.size()); ++ky)
        for (int kx = 0; kx < static_cast<int>(taps.size()); ++kx)
          soft[(y + ky) * m + (x + kx)] += v * taps[ky] * taps[kx];
    }
  double sum = 0.0;
  for (double v : soft) sum += v;
  Kernel2D k{m, m, std::vector<float>(soft.size())};
  for (std::size_t i = 0; i < soft.size(); ++i) k.weights[i] = static_cast<float>(soft[i] / sum);
  return k;
}

Kernel2D motion_kernel(int length, double sigma, double angle_deg) {
  const int radius = length / 2 + 1;
  const int n = 2 * radius + 1;
  std::vector<double> acc(static_cast<std::size_t>(n) * n, 0.0);
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta), s = std::sin(theta);
  const double half = length / 2.0;
  const int samples = std::max(2, length * 4);
  for (int i = 0; i <= samples; ++i) {
    const double t = -half + length * static_cast<double>(i) / samples;
    const double w = sigma > 0.0 ? std::exp(-0.5 * t * t / (sigma * sigma)) : 1.0;
    const double px = radius + t * c, py = radius + t * s;
    const int x0 = static_cast<int>(std::floor(px)), y0 = static_cast<int>(std::floor(py));
    const double fx = px - x0, fy = py - y0;
    const double corner[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy, fx * fy};
    const int xs[4] = {x0, x0 + 1, x0, x0 + 1};
    const int ys[4] = {y0, y0, y0 + 1, y0 + 1};
    for (int k = 0; k < 4; ++k)
      if (xs[k] >= 0 && xs[k] < n && ys[k] >= 0 && ys[k] < n)
        acc[ys[k] * n + xs[k]] += w * corner[k];
  }
  double sum = 0.0;
  for (double v : acc) sum += v;
  Kernel2D k{n, n, std::vector<float>(acc.size())};
  for (std::size_t i = 0; i < acc.size(); ++i) k.weights[i] = static_cast<float>(acc[i] / sum);
  return k;
}

FloatImage gaussian_blur(const FloatImage& img, double sigma) {
  const auto taps = gaussian_taps(sigma);
  return kernels::parallel::convolve_separable(img, taps, taps);
}

Plane convolve_plane(const Plane& src, const Kernel2D& kernel) {
  const int w = src.width(), h = src.height();
  const int rx = kernel.width / 2, ry = kernel.height / 2;
  Plane out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      float acc = 0.0f;
      for (int ky = 0; ky < kernel.height; ++ky) {
        const int sy = reflect101(y + ky - ry, h);
        for (int kx = 0; kx < kernel.width; ++kx) {
          const float k = kernel.at(kx, ky);
          if (k != 0.0f) acc += k * src.at(reflect101(x + kx - rx, w), sy);
        }
      }
      out.at(x, y) = acc;
    }
  return out;
}

Plane resize_plane(const Plane& src, int width, int height) {
  Plane out(width, height);
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, src.height() - 1.0);
    const int y0 = static_cast<int>(fy), y1 = std::min(y0 + 1, src.height() - 1);
    const float wy = static_cast<float>(fy - y0);
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, src.width() - 1.0);
      const int x0 = static_cast<int>(fx), x1 = std::min(x0 + 1, src.width() - 1);
      const float wx = static_cast<float>(fx - x0);
      const float top = src.at(x0, y0) * (1 - wx) + src.at(x1, y0) * wx;
      const float bottom = src.at(x0, y1) * (1 - wx) + src.at(x1, y1) * wx;
      out.at(x, y) = top * (1 - wy) + bottom * wy;
    }
  }
  return out;
}

}  // namespace strb::detail
