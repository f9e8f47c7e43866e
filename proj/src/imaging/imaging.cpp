#include "strb/imaging.hpp"

#include <cmath>
#include <string>

#include "strb/error.hpp"

namespace strb {

ImageBuffer resize_bilinear(const ImageBuffer& img, int new_width,
                            int new_height) {
  if (new_width < 1 || new_height < 1) {
    throw Error(ErrorKind::kInvalidDimension,
                "resize target must be positive, got " +
                    std::to_string(new_width) + "x" + std::to_string(new_height));
  }
  if (new_width == img.width() && new_height == img.height()) return img;
  return quantize(
      kernels::parallel::resize_bilinear(to_float(img), new_width, new_height));
}

ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2D& kernel) {
  if (kernel.width < 1 || kernel.height < 1 || kernel.width % 2 == 0 ||
      kernel.height % 2 == 0) {
    throw Error(ErrorKind::kInvalidKernel,
                "kernel dimensions must be odd, got " +
                    std::to_string(kernel.width) + "x" +
                    std::to_string(kernel.height));
  }
  if (kernel.weights.size() !=
      static_cast<std::size_t>(kernel.width) * kernel.height) {
    throw Error(ErrorKind::kInvalidKernel, "kernel weight count mismatch");
  }
  return quantize(kernels::parallel::convolve(to_float(img), kernel));
}

double psnr(const ImageBuffer& a, const ImageBuffer& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "psnr of " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + " vs " +
                    std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
  const double ssd =
      sum_squared_difference(a.samples(), b.samples(), a.width() * kChannels);
  if (ssd == 0.0) return kInfiniteDb;
  const double mse = ssd / static_cast<double>(a.sample_count());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace strb
