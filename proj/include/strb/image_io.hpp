#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "strb/image.hpp"

namespace strb {

enum class ImageFormat { kPng, kJpeg };

/// Decodes a PNG or JPEG file (sniffed from its signature). Grayscale is
/// expanded to RGB and alpha is dropped.
ImageBuffer load_image(const std::filesystem::path& path);

/// `quality` (1..100) only applies to JPEG.
void save_image(const ImageBuffer& img, const std::filesystem::path& path,
                ImageFormat format, int quality = 95);

std::vector<std::uint8_t> encode_png(const ImageBuffer& img);
/// Qualities from here up keep full-resolution chroma (4:4:4); lower ones
/// use the usual 4:2:0.
inline constexpr int kFullChromaQuality = 90;

std::vector<std::uint8_t> encode_jpeg(const ImageBuffer& img, int quality);
ImageBuffer decode_image(std::span<const std::uint8_t> bytes);

/// Encodes at `quality` and decodes again.
ImageBuffer jpeg_round_trip(const ImageBuffer& img, int quality);

}  // namespace strb
