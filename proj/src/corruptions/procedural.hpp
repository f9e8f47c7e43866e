#pragma once

// Procedural fields and filter kernels shared by the corruption transforms.

#include "strb/image.hpp"
#include "strb/kernels.hpp"
#include "strb/rng.hpp"

namespace strb::detail {

/// Multi-octave value noise in [0, 1]. `cell` is the lattice spacing of the
/// coarsest octave in pixels; each octave halves it.
Plane value_noise(int width, int height, const RandomStream& rng, double cell,
                  int octaves, double persistence);
double value_noise_at(const RandomStream& rng, double x, double y, double cell,
                      int octaves, double persistence);

/// Toroidal diamond-square fractal, cropped to width x height and normalized
/// to [0, 1]. Lower `decay` keeps more high-frequency roughness.
Plane plasma_fractal(int width, int height, const RandomStream& rng, double decay);

/// Normalized disc of `radius` softened by a Gaussian of `alias_sigma`.
Kernel2D disc_kernel(int radius, double alias_sigma);

/// Normalized line kernel through the center at `angle_deg`, Gaussian-
/// weighted along its length.
Kernel2D motion_kernel(int length, double sigma, double angle_deg);

FloatImage gaussian_blur(const FloatImage& img, double sigma);

Plane convolve_plane(const Plane& src, const Kernel2D& kernel);
Plane resize_plane(const Plane& src, int width, int height);

}  // namespace strb::detail
