#include "strb/image.hpp"

#include <string>

#include "strb/error.hpp"

namespace strb {

namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorKind::kInvalidDimension,
                "image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

ImageBuffer::ImageBuffer(int width, int height)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  data_.assign(static_cast<std::size_t>(width) * height * kChannels, 0);
}

ImageBuffer::ImageBuffer(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dimensions(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * height * kChannels) {
    throw Error(ErrorKind::kInvalidDimension,
                "sample count " + std::to_string(data_.size()) +
                    " does not match " + std::to_string(width) + "x" +
                    std::to_string(height) + "x3");
  }
}

FloatImage::FloatImage(int width, int height, float fill)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  data_.assign(static_cast<std::size_t>(width) * height * kChannels, fill);
}

FloatImage to_float(const ImageBuffer& img) {
  FloatImage out(img.width(), img.height());
  auto src = img.samples();
  auto dst = out.samples();
  const std::size_t n = src.size();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] / 255.0f;
  return out;
}

ImageBuffer quantize(const FloatImage& img) {
  ImageBuffer out(img.width(), img.height());
  auto src = img.samples();
  auto dst = out.mutable_samples();
  const std::size_t n = src.size();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) dst[i] = quantize_sample(src[i]);
  return out;
}

}  // namespace strb
