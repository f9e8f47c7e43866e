#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "strb/annotations.hpp"
#include "strb/image.hpp"
#include "strb/rng.hpp"

namespace strb::testing {

/// Self-deleting scratch directory.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "strb");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& child) const { return path_ / child; }

 private:
  std::filesystem::path path_;
};

struct Scene {
  ImageBuffer image;
  std::vector<TextInstance> labels;  // axis-aligned word boxes, one ignored
};

/// Deterministic photo-like test image: smooth shading, a few solid shapes,
/// fine texture, and dark glyph-like strokes inside the labelled boxes.
Scene synthetic_scene(int width, int height, std::uint64_t seed);

/// Writes `count` scenes as img_<k>.png plus GT in `format` under
/// root/images and root/gts.
void write_fixture_dataset(const std::filesystem::path& root, int count, AnnotationFormat format,
                           int width = 128, int height = 96);

/// Star-shaped simple polygon around `center`; concave for most draws.
Polygon random_star_polygon(RandomStream& rng, int vertices, Point center, double r_min,
                            double r_max);

/// Point-sampling oracle: counts grid points of a `resolution` x
/// `resolution` lattice over the joint bounding box lying inside both
/// polygons (even-odd), scaled to area.
double raster_intersection_area(const Polygon& a, const Polygon& b, int resolution);

/// Reads every regular file under `root` into (relative path, bytes) pairs,
/// sorted by path.
std::vector<std::pair<std::string, std::string>> snapshot_tree(const std::filesystem::path& root);

}  // namespace strb::testing
