#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strb {

/// Canonical order: the column order of the robustness tables.
enum class CorruptionId {
  kGaussianNoise,
  kShotNoise,
  kImpulseNoise,
  kDefocusBlur,
  kGlassBlur,
  kMotionBlur,
  kZoomBlur,
  kSnow,
  kFrost,
  kFog,
  kBrightness,
  kContrast,
  kPixelate,
  kJpeg,
  kDirty,
  kLines,
  kRotation,
  kElastic,
};

enum class Category { kNoise, kBlur, kWeather, kDigital, kGeometry };

inline constexpr int kNumCorruptions = 18;
inline constexpr int kNumSeverities = 5;
inline constexpr int kNumCategories = 5;

struct CorruptionEntry {
  CorruptionId id;
  Category category;
};

/// All 18 corruptions in canonical order.
const std::array<CorruptionEntry, kNumCorruptions>& list_corruptions();

Category category_of(CorruptionId id);
std::string_view name_of(CorruptionId id);      // "gaussian_noise"
std::string_view name_of(Category category);    // "noise"
std::string_view short_name_of(Category category);  // "N."
std::optional<CorruptionId> corruption_from_name(std::string_view name);
constexpr int index_of(CorruptionId id) { return static_cast<int>(id); }
constexpr int index_of(Category c) { return static_cast<int>(c); }

// ---- typed parameter rows --------------------------------------------------

struct GaussianNoiseParams { double sigma; };
struct ShotNoiseParams { double photons; };
struct ImpulseNoiseParams { double amount; };
struct DefocusParams { int radius; double alias_sigma; };
struct GlassParams { double sigma; int iterations; int max_delta; };
struct MotionParams { int length; double sigma; };
struct ZoomParams { double max_zoom; double step; };
struct SnowParams {
  double flake_mean;
  double flake_std;
  double threshold;
  int motion_length;
  double motion_sigma;
  double image_weight;
};
struct FrostParams { double opacity; };
struct FogParams { double strength; double decay; };
struct BrightnessParams { double shift; };
struct ContrastParams { double factor; };
struct PixelateParams { double factor; };
struct JpegParams { int quality; };
struct DirtyParams {
  int blob_count;
  double radius_min_frac;  // of min(width, height)
  double radius_max_frac;
  double opacity;
};
struct LinesParams {
  int stroke_count;
  double width_min_px;
  double width_max_frac;  // of min(width, height)
};
struct RotationParams { double angle_deg; };
struct ElasticParams { double alpha; double sigma; };

// Lookups for severities 1..5; throw kInvalidArgument otherwise.
GaussianNoiseParams gaussian_noise_params(int severity);
ShotNoiseParams shot_noise_params(int severity);
ImpulseNoiseParams impulse_noise_params(int severity);
DefocusParams defocus_params(int severity);
GlassParams glass_params(int severity);
MotionParams motion_params(int severity);
ZoomParams zoom_params(int severity);
SnowParams snow_params(int severity);
FrostParams frost_params(int severity);
FogParams fog_params(int severity);
BrightnessParams brightness_params(int severity);
ContrastParams contrast_params(int severity);
PixelateParams pixelate_params(int severity);
JpegParams jpeg_params(int severity);
DirtyParams dirty_params(int severity);
LinesParams lines_params(int severity);
RotationParams rotation_params(int severity);
ElasticParams elastic_params(int severity);

/// Named view of one catalog row, for documentation and lookups by name.
struct ParamRecord {
  std::vector<std::pair<std::string, double>> entries;

  std::optional<double> get(std::string_view key) const;
};

ParamRecord severity_params(CorruptionId id, int severity);

}  // namespace strb
