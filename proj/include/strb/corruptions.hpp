#pragma once

#include <array>
#include <vector>

#include "strb/catalog.hpp"
#include "strb/image.hpp"
#include "strb/point.hpp"
#include "strb/rng.hpp"

namespace strb {

struct CorruptionResult {
  ImageBuffer image;
  /// Maps original-image coordinates into the corrupted image. Identity for
  /// everything except rotation.
  Affine2D gt_transform;
};

/// Applies corruption `id` at `severity` (0..5; 0 returns the input).
///
/// Random structure (noise fields, blob placement, motion direction, …) is
/// drawn from the stream of `seed` with its severity field set to 0, so the
/// five severities of one image share their random numbers and differ only in
/// strength. Output is a pure function of (img, id, severity, seed).
CorruptionResult apply_corruption(const ImageBuffer& img, CorruptionId id,
                                  int severity, const SeedSpec& seed);

/// Stream that drives one corruption of one image, shared by all severities.
RandomStream corruption_stream(const SeedSpec& seed);

CorruptionResult corrupt_dirty(const ImageBuffer& img, int severity,
                               const SeedSpec& seed);
CorruptionResult corrupt_dirty(const ImageBuffer& img, const DirtyParams& params,
                               const SeedSpec& seed);

struct Stroke {
  Point from;
  Point to;
  double width = 1.0;
  std::array<float, 3> color{};
};

struct LinesOutcome {
  CorruptionResult result;
  std::vector<Stroke> strokes;
};

CorruptionResult corrupt_lines(const ImageBuffer& img, int severity,
                               const SeedSpec& seed);
/// Same as corrupt_lines, also reporting the strokes that were drawn.
LinesOutcome corrupt_lines_traced(const ImageBuffer& img, const LinesParams& params,
                                  const SeedSpec& seed);

struct RotationGeometry {
  Affine2D forward;
  int width = 0;
  int height = 0;
};

/// Rotation about the image center by `angle_deg` (positive turns +x toward
/// +y), with the canvas grown to the rotated bounding box.
RotationGeometry rotation_geometry(int width, int height, double angle_deg);

CorruptionResult corrupt_rotation(const ImageBuffer& img, int severity,
                                  const SeedSpec& seed);
/// Rotates by exactly params.angle_deg, no random sign.
CorruptionResult corrupt_rotation(const ImageBuffer& img,
                                  const RotationParams& params);

}  // namespace strb
