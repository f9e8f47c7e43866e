#pragma once

// Per-family corruption procedures. Each takes the input in [0, 1] floats and
// the shared per-image stream, and returns unquantized floats (jpeg excepted).

#include "strb/catalog.hpp"
#include "strb/corruptions.hpp"
#include "strb/image.hpp"
#include "strb/rng.hpp"

namespace strb::detail {

FloatImage gaussian_noise(const FloatImage& x, const GaussianNoiseParams& p, const RandomStream& rng);
FloatImage shot_noise(const FloatImage& x, const ShotNoiseParams& p, const RandomStream& rng);
FloatImage impulse_noise(const FloatImage& x, const ImpulseNoiseParams& p, const RandomStream& rng);

FloatImage defocus_blur(const FloatImage& x, const DefocusParams& p);
FloatImage glass_blur(const FloatImage& x, const GlassParams& p, const RandomStream& rng);
FloatImage motion_blur(const FloatImage& x, const MotionParams& p, const RandomStream& rng);
FloatImage zoom_blur(const FloatImage& x, const ZoomParams& p);

FloatImage snow(const FloatImage& x, const SnowParams& p, const RandomStream& rng);
FloatImage frost(const FloatImage& x, const FrostParams& p, const RandomStream& rng);
FloatImage fog(const FloatImage& x, const FogParams& p, const RandomStream& rng);

FloatImage brightness(const FloatImage& x, const BrightnessParams& p);
FloatImage contrast(const FloatImage& x, const ContrastParams& p);
FloatImage pixelate(const FloatImage& x, const PixelateParams& p);
ImageBuffer jpeg(const ImageBuffer& img, const JpegParams& p);
FloatImage dirty(const FloatImage& x, const DirtyParams& p, const RandomStream& rng);
FloatImage lines(const FloatImage& x, const LinesParams& p, const RandomStream& rng,
                 std::vector<Stroke>* strokes);

FloatImage elastic(const FloatImage& x, const ElasticParams& p, const RandomStream& rng);

}  // namespace strb::detail
