#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "strb/geometry.hpp"
#include "strb/image_io.hpp"
#include "strb/manifest.hpp"

namespace fs = std::filesystem;

namespace strb::testing {

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

namespace {

void paint(ImageBuffer& img, int x, int y, const double rgb[3], double alpha) {
  if (x < 0 || y < 0 || x >= img.width() || y >= img.height()) return;
  auto s = img.mutable_samples();
  const auto base = (static_cast<std::size_t>(y) * img.width() + x) * kChannels;
  for (int c = 0; c < kChannels; ++c) {
    const double v = (1.0 - alpha) * s[base + c] + alpha * rgb[c];
    s[base + c] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
  }
}

}  // namespace

Scene synthetic_scene(int width, int height, std::uint64_t seed) {
  RandomStream rng(mix64(seed + 0x5CE7E));
  Scene scene{ImageBuffer(width, height), {}};
  auto s = scene.image.mutable_samples();

  double base[3], tilt[3], phase[4];
  for (double& v : base) v = rng.next_uniform(60.0, 190.0);
  for (double& v : tilt) v = rng.next_uniform(-50.0, 50.0);
  for (double& v : phase) v = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
  const double fx = rng.next_uniform(1.0, 3.0), fy = rng.next_uniform(1.0, 3.0);
  const RandomStream texture = rng.substream(1);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / width, v = static_cast<double>(y) / height;
      const double wave = 25.0 * std::sin(2 * std::numbers::pi * fx * u + phase[0]) *
                          std::cos(2 * std::numbers::pi * fy * v + phase[1]);
      const auto i = static_cast<std::size_t>(y) * width + x;
      const double grain = 6.0 * (texture.uniform_at(i) - 0.5);
      for (int c = 0; c < 3; ++c) {
        const double val = base[c] + tilt[c] * (u - v) + wave * (c == 1 ? 0.7 : 1.0) + grain;
        s[i * 3 + c] = static_cast<std::uint8_t>(std::clamp(std::lround(val), 0L, 255L));
      }
    }
  }

  // Solid shapes.
  for (int k = 0; k < 3; ++k) {
    const double cx = rng.next_uniform(0, width), cy = rng.next_uniform(0, height);
    const double rx = rng.next_uniform(0.08, 0.25) * width, ry = rng.next_uniform(0.08, 0.25) * height;
    double color[3];
    for (double& c : color) c = rng.next_uniform(0, 255);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double dx = (x + 0.5 - cx) / rx, dy = (y + 0.5 - cy) / ry;
        if (dx * dx + dy * dy <= 1.0) paint(scene.image, x, y, color, 0.8);
      }
    }
  }

  // Word boxes on separate bands, filled with glyph strokes.
  const int bands = 3;
  for (int b = 0; b < bands; ++b) {
    const double band_h = static_cast<double>(height) / bands;
    const double h = std::floor(band_h * rng.next_uniform(0.35, 0.6));
    const double w = std::floor(width * rng.next_uniform(0.3, 0.6));
    const double x0 = std::floor(rng.next_uniform(2.0, width - w - 2.0));
    const double y0 = std::floor(b * band_h + rng.next_uniform(1.0, band_h - h - 1.0));
    const double ink[3] = {rng.next_uniform(0, 50), rng.next_uniform(0, 50), rng.next_uniform(0, 50)};
    // Irregular advances and stem widths, like proportional type.
    for (int gx = static_cast<int>(x0) + 1; gx + 3 < x0 + w;) {
      const int stem = 1 + static_cast<int>(rng.next_below(2));
      const int top = static_cast<int>(y0 + 1 + rng.next_below(3));
      for (int y = top; y < y0 + h - 1; ++y) {
        for (int k = 0; k < stem; ++k) paint(scene.image, gx + k, y, ink, 0.9);
      }
      paint(scene.image, gx + stem, static_cast<int>(y0 + h / 2), ink, 0.9);
      gx += stem + 2 + static_cast<int>(rng.next_below(4));
    }
    TextInstance inst;
    inst.polygon = canonicalize({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}});
    inst.ignore = b == bands - 1;
    if (!inst.ignore) inst.transcription = "word" + std::to_string(b);
    scene.labels.push_back(std::move(inst));
  }
  return scene;
}

void write_fixture_dataset(const fs::path& root, int count, AnnotationFormat format, int width,
                           int height) {
  fs::create_directories(root / "images");
  fs::create_directories(root / "gts");
  for (int k = 0; k < count; ++k) {
    const std::string stem = "img_" + std::to_string(k);
    const auto scene = synthetic_scene(width, height, static_cast<std::uint64_t>(k) + 1);
    save_image(scene.image, root / "images" / (stem + ".png"), ImageFormat::kPng);
    write_text_file(root / "gts" / gt_file_name(stem, format),
                    write_gt(scene.labels, format, stem));
  }
}

Polygon random_star_polygon(RandomStream& rng, int vertices, Point center, double r_min,
                            double r_max) {
  // Jittered even spacing keeps every angular gap below pi (for n >= 4), so
  // the center stays inside the kernel and the polygon is simple.
  const double step = 2.0 * std::numbers::pi / vertices;
  const double offset = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
  Polygon p;
  for (int i = 0; i < vertices; ++i) {
    const double angle = offset + step * (i + 0.9 * rng.next_uniform());
    const double r = rng.next_uniform(r_min, r_max);
    p.push_back({center.x + r * std::cos(angle), center.y + r * std::sin(angle)});
  }
  return p;
}

namespace {

/// Sorted x crossings of the horizontal line at `y`.
void crossings(const Polygon& p, double y, std::vector<double>& xs) {
  xs.clear();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = p[i], b = p[(i + 1) % n];
    if ((a.y <= y) != (b.y <= y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
  }
  std::sort(xs.begin(), xs.end());
}

/// Grid columns x0 + (k + 0.5) * dx, k in [0, n), falling in [lo, hi).
long columns_in(double lo, double hi, double x0, double dx, int n) {
  const double first = std::ceil((lo - x0) / dx - 0.5);
  const double last = std::ceil((hi - x0) / dx - 0.5) - 1;
  const double a = std::max(first, 0.0), b = std::min(last, static_cast<double>(n - 1));
  return b >= a ? static_cast<long>(b - a + 1) : 0;
}

}  // namespace

double raster_intersection_area(const Polygon& a, const Polygon& b, int resolution) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto* poly : {&a, &b}) {
    for (const Point& q : *poly) {
      lo_x = std::min(lo_x, q.x), hi_x = std::max(hi_x, q.x);
      lo_y = std::min(lo_y, q.y), hi_y = std::max(hi_y, q.y);
    }
  }
  const double dx = (hi_x - lo_x) / resolution, dy = (hi_y - lo_y) / resolution;
  std::vector<double> xa, xb;
  long hits = 0;
  for (int r = 0; r < resolution; ++r) {
    const double y = lo_y + (r + 0.5) * dy;
    crossings(a, y, xa);
    crossings(b, y, xb);
    // Even-odd spans of each polygon, intersected pairwise.
    for (std::size_t i = 0; i + 1 < xa.size(); i += 2) {
      for (std::size_t j = 0; j + 1 < xb.size(); j += 2) {
        const double lo = std::max(xa[i], xb[j]), hi = std::min(xa[i + 1], xb[j + 1]);
        if (hi > lo) hits += columns_in(lo, hi, lo_x, dx, resolution);
      }
    }
  }
  return static_cast<double>(hits) * dx * dy;
}

std::vector<std::pair<std::string, std::string>> snapshot_tree(const fs::path& root) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    out.emplace_back(fs::relative(entry.path(), root).generic_string(), bytes.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strb::testing
