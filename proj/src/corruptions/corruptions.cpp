#include "strb/corruptions.hpp"

#include <string>

#include "strb/error.hpp"
#include "transforms.hpp"

namespace strb {

RandomStream corruption_stream(const SeedSpec& seed) {
  SeedSpec shared = seed;
  shared.severity = 0;
  return derive_rng(shared);
}

CorruptionResult apply_corruption(const ImageBuffer& img, CorruptionId id,
                                  int severity, const SeedSpec& seed) {
  if (severity < 0 || severity > kNumSeverities) {
    throw Error(ErrorKind::kInvalidArgument,
                "severity must be in 0..5, got " + std::to_string(severity));
  }
  if (severity == 0) return {img, Affine2D::identity()};

  using namespace detail;
  const RandomStream rng = corruption_stream(seed);
  const int s = severity;
  auto done = [](const FloatImage& f) {
    return CorruptionResult{quantize(f), Affine2D::identity()};
  };

  switch (id) {
    case CorruptionId::kGaussianNoise:
      return done(gaussian_noise(to_float(img), gaussian_noise_params(s), rng));
    case CorruptionId::kShotNoise:
      return done(shot_noise(to_float(img), shot_noise_params(s), rng));
    case CorruptionId::kImpulseNoise:
      return done(impulse_noise(to_float(img), impulse_noise_params(s), rng));
    case CorruptionId::kDefocusBlur:
      return done(defocus_blur(to_float(img), defocus_params(s)));
    case CorruptionId::kGlassBlur:
      return done(glass_blur(to_float(img), glass_params(s), rng));
    case CorruptionId::kMotionBlur:
      return done(motion_blur(to_float(img), motion_params(s), rng));
    case CorruptionId::kZoomBlur:
      return done(zoom_blur(to_float(img), zoom_params(s)));
    case CorruptionId::kSnow:
      return done(snow(to_float(img), snow_params(s), rng));
    case CorruptionId::kFrost:
      return done(frost(to_float(img), frost_params(s), rng));
    case CorruptionId::kFog:
      return done(fog(to_float(img), fog_params(s), rng));
    case CorruptionId::kBrightness:
      return done(brightness(to_float(img), brightness_params(s)));
    case CorruptionId::kContrast:
      return done(contrast(to_float(img), contrast_params(s)));
    case CorruptionId::kPixelate:
      return done(pixelate(to_float(img), pixelate_params(s)));
    case CorruptionId::kJpeg:
      return {jpeg(img, jpeg_params(s)), Affine2D::identity()};
    case CorruptionId::kDirty:
      return corrupt_dirty(img, dirty_params(s), seed);
    case CorruptionId::kLines:
      return corrupt_lines_traced(img, lines_params(s), seed).result;
    case CorruptionId::kRotation:
      return corrupt_rotation(img, s, seed);
    case CorruptionId::kElastic:
      return done(elastic(to_float(img), elastic_params(s), rng));
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown corruption id");
}

CorruptionResult corrupt_dirty(const ImageBuffer& img, int severity,
                               const SeedSpec& seed) {
  return corrupt_dirty(img, dirty_params(severity), seed);
}

CorruptionResult corrupt_dirty(const ImageBuffer& img, const DirtyParams& params,
                               const SeedSpec& seed) {
  return {quantize(detail::dirty(to_float(img), params, corruption_stream(seed))),
          Affine2D::identity()};
}

CorruptionResult corrupt_lines(const ImageBuffer& img, int severity,
                               const SeedSpec& seed) {
  return corrupt_lines_traced(img, lines_params(severity), seed).result;
}

LinesOutcome corrupt_lines_traced(const ImageBuffer& img, const LinesParams& params,
                                  const SeedSpec& seed) {
  LinesOutcome outcome;
  const FloatImage drawn =
      detail::lines(to_float(img), params, corruption_stream(seed), &outcome.strokes);
  outcome.result = {quantize(drawn), Affine2D::identity()};
  return outcome;
}

}  // namespace strb
