#pragma once

#include <limits>

#include "strb/image.hpp"
#include "strb/kernels.hpp"

namespace strb {

/// Bilinear resize with half-pixel-center sampling and clamped edges.
ImageBuffer resize_bilinear(const ImageBuffer& img, int new_width,
                            int new_height);

/// Per-channel convolution with reflect-101 borders; rounded and clamped.
ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2D& kernel);

/// Peak signal-to-noise ratio in dB; +infinity for identical images.
double psnr(const ImageBuffer& a, const ImageBuffer& b);

inline constexpr double kInfiniteDb = std::numeric_limits<double>::infinity();

}  // namespace strb
