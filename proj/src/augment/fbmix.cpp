#include "strb/fbmix.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "strb/error.hpp"
#include "strb/imaging.hpp"

namespace fs = std::filesystem;

namespace strb {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha must be in [0, 1]");
  }
}

void check_non_empty(const ImageBuffer& img, const char* what) {
  if (img.width() <= 0 || img.height() <= 0) {
    throw Error(ErrorKind::kInvalidDimension, std::string(what) + " image is empty");
  }
}

bool has_image_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

BackgroundPool load_background_pool(const fs::path& source) {
  BackgroundPool pool;
  if (fs::is_directory(source)) {
    for (const auto& entry : fs::directory_iterator(source)) {
      if (entry.is_regular_file() && has_image_extension(entry.path())) {
        pool.entries.push_back(entry.path());
      }
    }
    std::sort(pool.entries.begin(), pool.entries.end());
    return pool;
  }
  if (!fs::is_regular_file(source)) {
    throw Error(ErrorKind::kIo, "background pool " + source.string() + " not found");
  }
  std::istringstream lines(read_text_file(source));
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    fs::path p(line);
    pool.entries.push_back(p.is_absolute() ? p : source.parent_path() / p);
  }
  return pool;
}

ImageBuffer blend_images(const ImageBuffer& a, const ImageBuffer& b, double alpha) {
  check_alpha(alpha);
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::kDimensionMismatch, "blend inputs differ in size");
  }
  if (alpha == 1.0) return a;
  if (alpha == 0.0) return b;
  ImageBuffer out(a.width(), a.height());
  const auto sa = a.samples();
  const auto sb = b.samples();
  auto so = out.mutable_samples();
  const double beta = 1.0 - alpha;
  const auto n = static_cast<std::ptrdiff_t>(sa.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double v = alpha * sa[i] + beta * sb[i];
    so[i] = static_cast<std::uint8_t>(std::clamp(std::nearbyint(v), 0.0, 255.0));
  }
  return out;
}

AugmentedSample fbmix(const ImageBuffer& fg, const std::vector<TextInstance>& fg_labels,
                      const ImageBuffer& bg, double alpha) {
  check_non_empty(fg, "foreground");
  check_non_empty(bg, "background");
  check_alpha(alpha);
  if (alpha == 1.0) return {fg, fg_labels};
  const bool same = bg.width() == fg.width() && bg.height() == fg.height();
  ImageBuffer resized = same ? ImageBuffer() : resize_bilinear(bg, fg.width(), fg.height());
  return {blend_images(fg, same ? bg : resized, alpha), fg_labels};
}

AugmentedSample mixup(const LabeledImage& a, const LabeledImage& b, double alpha) {
  check_non_empty(a.image, "first");
  check_non_empty(b.image, "second");
  check_alpha(alpha);
  const double sx = static_cast<double>(a.image.width()) / b.image.width();
  const double sy = static_cast<double>(a.image.height()) / b.image.height();
  const bool same = sx == 1.0 && sy == 1.0;

  AugmentedSample out;
  out.image = blend_images(
      a.image, same ? b.image : resize_bilinear(b.image, a.image.width(), a.image.height()),
      alpha);
  out.labels = a.labels;
  for (TextInstance inst : b.labels) {
    for (auto& p : inst.polygon) {
      p.x *= sx;
      p.y *= sy;
    }
    out.labels.push_back(std::move(inst));
  }
  return out;
}

const fs::path& sample_background(const BackgroundPool& pool, const SeedSpec& seed) {
  if (pool.entries.empty()) throw Error(ErrorKind::kEmptyPool, "background pool is empty");
  auto rng = derive_rng(seed);
  return pool.entries[static_cast<std::size_t>(rng.next_below(pool.entries.size()))];
}

}  // namespace strb
