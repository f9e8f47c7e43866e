#include "strb/catalog.hpp"

#include <string>

#include "strb/error.hpp"

namespace strb {

namespace {

constexpr std::array<CorruptionEntry, kNumCorruptions> kCorruptions{{
    {CorruptionId::kGaussianNoise, Category::kNoise},
    {CorruptionId::kShotNoise, Category::kNoise},
    {CorruptionId::kImpulseNoise, Category::kNoise},
    {CorruptionId::kDefocusBlur, Category::kBlur},
    {CorruptionId::kGlassBlur, Category::kBlur},
    {CorruptionId::kMotionBlur, Category::kBlur},
    {CorruptionId::kZoomBlur, Category::kBlur},
    {CorruptionId::kSnow, Category::kWeather},
    {CorruptionId::kFrost, Category::kWeather},
    {CorruptionId::kFog, Category::kWeather},
    {CorruptionId::kBrightness, Category::kDigital},
    {CorruptionId::kContrast, Category::kDigital},
    {CorruptionId::kPixelate, Category::kDigital},
    {CorruptionId::kJpeg, Category::kDigital},
    {CorruptionId::kDirty, Category::kDigital},
    {CorruptionId::kLines, Category::kDigital},
    {CorruptionId::kRotation, Category::kGeometry},
    {CorruptionId::kElastic, Category::kGeometry},
}};

constexpr std::array<std::string_view, kNumCorruptions> kNames{
    "gaussian_noise", "shot_noise", "impulse_noise", "defocus_blur",
    "glass_blur",     "motion_blur", "zoom_blur",    "snow",
    "frost",          "fog",         "brightness",   "contrast",
    "pixelate",       "jpeg",        "dirty",        "lines",
    "rotation",       "elastic"};

template <typename T>
const T& row(const std::array<T, kNumSeverities>& table, int severity,
             std::string_view what) {
  if (severity < 1 || severity > kNumSeverities) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + ": severity must be in 1..5, got " +
                    std::to_string(severity));
  }
  return table[severity - 1];
}

constexpr std::array<GaussianNoiseParams, 5> kGaussian{{{.08}, {.12}, {.18}, {.26}, {.38}}};
constexpr std::array<ShotNoiseParams, 5> kShot{{{60}, {25}, {12}, {5}, {3}}};
constexpr std::array<ImpulseNoiseParams, 5> kImpulse{{{.03}, {.06}, {.09}, {.17}, {.27}}};
constexpr std::array<DefocusParams, 5> kDefocus{
    {{3, .1}, {4, .5}, {6, .5}, {8, .5}, {10, .5}}};
constexpr std::array<GlassParams, 5> kGlass{
    {{.7, 1, 1}, {.9, 2, 1}, {1.1, 2, 2}, {1.3, 3, 2}, {1.5, 4, 3}}};
// The Gaussian weighting along the stroke separates the two length-15 rows.
constexpr std::array<MotionParams, 5> kMotion{
    {{10, 3}, {15, 5}, {15, 8}, {20, 12}, {25, 15}}};
constexpr std::array<ZoomParams, 5> kZoom{
    {{1.11, .01}, {1.16, .01}, {1.21, .01}, {1.26, .01}, {1.31, .01}}};
constexpr std::array<SnowParams, 5> kSnow{{
    {.10, .3, .60, 10, 3, .85},
    {.15, .3, .57, 12, 4, .80},
    {.20, .3, .54, 14, 5, .75},
    {.25, .3, .50, 16, 6, .70},
    {.30, .3, .45, 18, 7, .65},
}};
constexpr std::array<FrostParams, 5> kFrost{{{.25}, {.35}, {.45}, {.55}, {.65}}};
constexpr std::array<FogParams, 5> kFog{
    {{1.5, 2.0}, {2.0, 2.0}, {2.5, 1.7}, {3.0, 1.5}, {3.5, 1.4}}};
constexpr std::array<BrightnessParams, 5> kBrightness{{{.1}, {.2}, {.3}, {.4}, {.5}}};
constexpr std::array<ContrastParams, 5> kContrast{{{.4}, {.3}, {.2}, {.1}, {.05}}};
constexpr std::array<PixelateParams, 5> kPixelate{{{.6}, {.5}, {.4}, {.3}, {.25}}};
constexpr std::array<JpegParams, 5> kJpeg{{{25}, {18}, {15}, {10}, {7}}};
constexpr std::array<DirtyParams, 5> kDirty{{
    {2, .03, .12, .35},
    {4, .03, .12, .45},
    {6, .03, .12, .55},
    {9, .03, .12, .65},
    {12, .03, .12, .75},
}};
constexpr std::array<LinesParams, 5> kLines{{
    {3, 1.0, .008},
    {6, 1.0, .016},
    {9, 1.0, .024},
    {12, 1.0, .032},
    {15, 1.0, .040},
}};
constexpr std::array<RotationParams, 5> kRotation{{{5}, {10}, {15}, {25}, {35}}};
constexpr std::array<ElasticParams, 5> kElastic{
    {{10, 5}, {17.5, 4.75}, {25, 4.5}, {32.5, 4.25}, {40, 4}}};

}  // namespace

const std::array<CorruptionEntry, kNumCorruptions>& list_corruptions() {
  return kCorruptions;
}

Category category_of(CorruptionId id) { return kCorruptions[index_of(id)].category; }

std::string_view name_of(CorruptionId id) { return kNames[index_of(id)]; }

std::string_view name_of(Category category) {
  switch (category) {
    case Category::kNoise: return "noise";
    case Category::kBlur: return "blur";
    case Category::kWeather: return "weather";
    case Category::kDigital: return "digital";
    case Category::kGeometry: return "geometry";
  }
  return "";
}

std::string_view short_name_of(Category category) {
  switch (category) {
    case Category::kNoise: return "N.";
    case Category::kBlur: return "B.";
    case Category::kWeather: return "W.";
    case Category::kDigital: return "D.";
    case Category::kGeometry: return "G.";
  }
  return "";
}

std::optional<CorruptionId> corruption_from_name(std::string_view name) {
  for (int i = 0; i < kNumCorruptions; ++i)
    if (kNames[i] == name) return static_cast<CorruptionId>(i);
  return std::nullopt;
}

GaussianNoiseParams gaussian_noise_params(int s) { return row(kGaussian, s, "gaussian_noise"); }
ShotNoiseParams shot_noise_params(int s) { return row(kShot, s, "shot_noise"); }
ImpulseNoiseParams impulse_noise_params(int s) { return row(kImpulse, s, "impulse_noise"); }
DefocusParams defocus_params(int s) { return row(kDefocus, s, "defocus_blur"); }
GlassParams glass_params(int s) { return row(kGlass, s, "glass_blur"); }
MotionParams motion_params(int s) { return row(kMotion, s, "motion_blur"); }
ZoomParams zoom_params(int s) { return row(kZoom, s, "zoom_blur"); }
SnowParams snow_params(int s) { return row(kSnow, s, "snow"); }
FrostParams frost_params(int s) { return row(kFrost, s, "frost"); }
FogParams fog_params(int s) { return row(kFog, s, "fog"); }
BrightnessParams brightness_params(int s) { return row(kBrightness, s, "brightness"); }
ContrastParams contrast_params(int s) { return row(kContrast, s, "contrast"); }
PixelateParams pixelate_params(int s) { return row(kPixelate, s, "pixelate"); }
JpegParams jpeg_params(int s) { return row(kJpeg, s, "jpeg"); }
DirtyParams dirty_params(int s) { return row(kDirty, s, "dirty"); }
LinesParams lines_params(int s) { return row(kLines, s, "lines"); }
RotationParams rotation_params(int s) { return row(kRotation, s, "rotation"); }
ElasticParams elastic_params(int s) { return row(kElastic, s, "elastic"); }

std::optional<double> ParamRecord::get(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

ParamRecord severity_params(CorruptionId id, int s) {
  switch (id) {
    case CorruptionId::kGaussianNoise: {
      auto p = gaussian_noise_params(s);
      return {{{"sigma", p.sigma}}};
    }
    case CorruptionId::kShotNoise: {
      auto p = shot_noise_params(s);
      return {{{"photons", p.photons}}};
    }
    case CorruptionId::kImpulseNoise: {
      auto p = impulse_noise_params(s);
      return {{{"amount", p.amount}}};
    }
    case CorruptionId::kDefocusBlur: {
      auto p = defocus_params(s);
      return {{{"radius", p.radius}, {"alias_sigma", p.alias_sigma}}};
    }
    case CorruptionId::kGlassBlur: {
      auto p = glass_params(s);
      return {{{"sigma", p.sigma},
               {"iterations", p.iterations},
               {"max_delta", p.max_delta}}};
    }
    case CorruptionId::kMotionBlur: {
      auto p = motion_params(s);
      return {{{"length", p.length}, {"sigma", p.sigma}}};
    }
    case CorruptionId::kZoomBlur: {
      auto p = zoom_params(s);
      return {{{"max_zoom", p.max_zoom}, {"step", p.step}}};
    }
    case CorruptionId::kSnow: {
      auto p = snow_params(s);
      return {{{"flake_mean", p.flake_mean},
               {"flake_std", p.flake_std},
               {"threshold", p.threshold},
               {"motion_length", p.motion_length},
               {"motion_sigma", p.motion_sigma},
               {"image_weight", p.image_weight}}};
    }
    case CorruptionId::kFrost: {
      auto p = frost_params(s);
      return {{{"opacity", p.opacity}}};
    }
    case CorruptionId::kFog: {
      auto p = fog_params(s);
      return {{{"strength", p.strength}, {"decay", p.decay}}};
    }
    case CorruptionId::kBrightness: {
      auto p = brightness_params(s);
      return {{{"shift", p.shift}}};
    }
    case CorruptionId::kContrast: {
      auto p = contrast_params(s);
      return {{{"factor", p.factor}}};
    }
    case CorruptionId::kPixelate: {
      auto p = pixelate_params(s);
      return {{{"factor", p.factor}}};
    }
    case CorruptionId::kJpeg: {
      auto p = jpeg_params(s);
      return {{{"quality", p.quality}}};
    }
    case CorruptionId::kDirty: {
      auto p = dirty_params(s);
      return {{{"blob_count", p.blob_count},
               {"radius_min_frac", p.radius_min_frac},
               {"radius_max_frac", p.radius_max_frac},
               {"opacity", p.opacity}}};
    }
    case CorruptionId::kLines: {
      auto p = lines_params(s);
      return {{{"stroke_count", p.stroke_count},
               {"width_min_px", p.width_min_px},
               {"width_max_frac", p.width_max_frac}}};
    }
    case CorruptionId::kRotation: {
      auto p = rotation_params(s);
      return {{{"angle_deg", p.angle_deg}}};
    }
    case CorruptionId::kElastic: {
      auto p = elastic_params(s);
      return {{{"alpha", p.alpha}, {"sigma", p.sigma}}};
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown corruption id");
}

}  // namespace strb
