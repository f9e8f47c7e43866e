#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strb/point.hpp"

namespace strb {

/// One text region: a simple polygon with positive signed area, a don't-care
/// flag, and the transcription when the format carries one.
struct TextInstance {
  Polygon polygon;
  bool ignore = false;
  std::optional<std::string> transcription;

  friend bool operator==(const TextInstance&, const TextInstance&) = default;
};

struct Prediction {
  TextInstance instance;
  std::optional<double> confidence;
};

enum class AnnotationFormat { kIc15Quad, kPolyTxt, kJson };

std::string_view to_string(AnnotationFormat format);
std::optional<AnnotationFormat> annotation_format_from_name(std::string_view name);

struct ImageAnnotations {
  std::string image_id;
  std::optional<int> width;
  std::optional<int> height;
  std::vector<TextInstance> instances;
};

inline constexpr std::string_view kIgnoreMarker = "###";

/// "x1,y1,...,x4,y4,transcription" per line; the transcription is everything
/// after the eighth comma and "###" marks a don't-care region.
std::vector<TextInstance> parse_ic15_gt(std::string_view text);

/// "x1,y1,...,xk,yk[,###]" per line, k >= 3.
std::vector<TextInstance> parse_poly_gt(std::string_view text);

struct ParsedPredictions {
  std::vector<Prediction> predictions;
  /// Per-line notes for rejected (self-intersecting or zero-area) polygons.
  std::vector<std::string> warnings;
};

/// Polygon lines as in parse_poly_gt; an odd coordinate count makes the last
/// field a confidence in [0, 1]. A trailing non-numeric field is taken as a
/// transcription so ICDAR-style result files load unchanged.
ParsedPredictions parse_predictions(std::string_view text);

struct JsonAnnotations {
  std::string image_id;
  std::vector<Prediction> instances;
};

/// {"image_id": str, "instances": [{"polygon": [[x, y], ...], "ignore": bool,
///   "transcription": str|null, "confidence": num|null}]}
JsonAnnotations parse_json_annotations(std::string_view text);

/// Serializes with two-decimal coordinates. ic15_quad requires 4-vertex
/// polygons (kFormatIncompatible otherwise). `image_id` is used by json only.
std::string write_gt(std::span<const TextInstance> instances, AnnotationFormat format,
                     std::string_view image_id = {});

/// Reads and parses a ground-truth file; errors carry the file name.
std::vector<TextInstance> load_ground_truth(const std::filesystem::path& path,
                                            AnnotationFormat format);

/// Reads a prediction file; `.json` files use the JSON schema, anything else
/// the line grammar of parse_predictions.
ParsedPredictions load_predictions(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace strb
