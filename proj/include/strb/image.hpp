#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace strb {

inline constexpr int kChannels = 3;

/// 8-bit interleaved RGB raster, row-major.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  /// Zero-filled image. Throws kInvalidDimension when either side is < 1.
  ImageBuffer(int width, int height);
  /// Takes ownership of `data`; its size must be width * height * 3.
  ImageBuffer(int width, int height, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t sample_count() const noexcept { return data_.size(); }

  std::span<const std::uint8_t> samples() const noexcept { return data_; }
  std::span<std::uint8_t> mutable_samples() noexcept { return data_; }

  std::uint8_t at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Working raster for corruption math: interleaved RGB floats nominally in
/// [0, 1]. Values may leave that range until quantized.
class FloatImage {
 public:
  FloatImage() = default;
  FloatImage(int width, int height, float fill = 0.0f);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t sample_count() const noexcept { return data_.size(); }

  std::span<const float> samples() const noexcept { return data_; }
  std::span<float> samples() noexcept { return data_; }

  float* row(int y) noexcept {
    return data_.data() + static_cast<std::size_t>(y) * width_ * kChannels;
  }
  const float* row(int y) const noexcept {
    return data_.data() + static_cast<std::size_t>(y) * width_ * kChannels;
  }

  float& at(int x, int y, int c) noexcept {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }
  float at(int x, int y, int c) const noexcept {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

/// Single-channel float plane, used for masks, noise fields and displacement
/// maps.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, float fill = 0.0f)
      : width_(width),
        height_(height),
        data_(static_cast<std::size_t>(width) * height, fill) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::span<const float> values() const noexcept { return data_; }
  std::span<float> values() noexcept { return data_; }
  float& at(int x, int y) noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  float at(int x, int y) const noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

/// Samples scaled to [0, 1].
FloatImage to_float(const ImageBuffer& img);

/// The one quantization point: scale by 255, round half to even, clamp.
ImageBuffer quantize(const FloatImage& img);

inline std::uint8_t quantize_sample(float v) {
  float scaled = v * 255.0f;
  if (!(scaled > 0.0f)) return 0;  // also maps NaN to 0
  if (scaled >= 255.0f) return 255;
  return static_cast<std::uint8_t>(std::nearbyint(scaled));
}

}  // namespace strb
