#pragma once

#include <filesystem>
#include <vector>

#include "strb/annotations.hpp"
#include "strb/image.hpp"
#include "strb/rng.hpp"

namespace strb {

inline constexpr double kDefaultAlpha = 0.5;

struct BackgroundPool {
  std::vector<std::filesystem::path> entries;
};

/// A directory of PNG/JPEG files (sorted by name), or a text file listing one
/// image path per line, relative paths resolved against the list's folder.
BackgroundPool load_background_pool(const std::filesystem::path& source);

struct AugmentedSample {
  ImageBuffer image;
  std::vector<TextInstance> labels;
};

struct LabeledImage {
  ImageBuffer image;
  std::vector<TextInstance> labels;
};

/// Per sample: round(alpha * a + (1 - alpha) * b), ties to even. `b` must
/// already match `a` in size. alpha == 1 returns `a`, alpha == 0 returns `b`.
ImageBuffer blend_images(const ImageBuffer& a, const ImageBuffer& b, double alpha);

/// Blends a text-free background into the foreground; labels pass through.
/// The background is bilinearly resized to the foreground size if needed.
AugmentedSample fbmix(const ImageBuffer& fg, const std::vector<TextInstance>& fg_labels,
                      const ImageBuffer& bg, double alpha = kDefaultAlpha);

/// Blends `b` (resized to `a`) into `a`; labels are a's followed by b's,
/// with b's coordinates scaled by the resize ratios.
AugmentedSample mixup(const LabeledImage& a, const LabeledImage& b, double alpha = kDefaultAlpha);

/// Uniform seeded pick; kEmptyPool on an empty pool.
const std::filesystem::path& sample_background(const BackgroundPool& pool, const SeedSpec& seed);

}  // namespace strb
