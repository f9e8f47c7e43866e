#include "strb/annotations.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strb/error.hpp"
#include "strb/geometry.hpp"

namespace strb {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_failure(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view strip_bom(std::string_view text) {
  if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
      static_cast<unsigned char>(text[1]) == 0xBB &&
      static_cast<unsigned char>(text[2]) == 0xBF) {
    text.remove_prefix(3);
  }
  return text;
}

// Calls fn(line_number, line) for every non-blank line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  text = strip_bom(text);
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (!trim(line).empty()) fn(number, line);
  }
}

std::vector<std::string_view> split_commas(std::string_view line, std::size_t max_fields) {
  std::vector<std::string_view> fields;
  while (fields.size() + 1 < max_fields) {
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) break;
    fields.push_back(line.substr(0, comma));
    line.remove_prefix(comma + 1);
  }
  fields.push_back(line);
  return fields;
}

std::optional<double> to_number(std::string_view field) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

double require_number(std::string_view field, std::size_t line) {
  if (auto v = to_number(field)) return *v;
  parse_failure(line, "non-numeric coordinate '" + std::string(trim(field)) + "'");
}

Polygon polygon_from(std::span<const std::string_view> fields, std::size_t line) {
  Polygon p;
  p.reserve(fields.size() / 2);
  for (std::size_t i = 0; i + 1 < fields.size(); i += 2)
    p.push_back({require_number(fields[i], line), require_number(fields[i + 1], line)});
  return p;
}

// Empty string when valid, else the reason.
std::string polygon_problem(const Polygon& p) {
  if (p.size() < 3) return "polygon needs at least 3 vertices";
  if (!is_simple(p)) return "self-intersecting polygon";
  if (polygon_area(p) <= 0.0) return "zero-area polygon";
  return {};
}

TextInstance validated(Polygon p, std::size_t line) {
  if (auto problem = polygon_problem(p); !problem.empty()) parse_failure(line, problem);
  return TextInstance{canonicalize(std::move(p)), false, std::nullopt};
}

std::string format_coordinate(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void append_polygon(std::string& out, const Polygon& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += format_coordinate(p[i].x);
    out += ',';
    out += format_coordinate(p[i].y);
  }
}

double round2(double v) { return std::stod(format_coordinate(v)); }

}  // namespace

std::string_view to_string(AnnotationFormat format) {
  switch (format) {
    case AnnotationFormat::kIc15Quad: return "ic15_quad";
    case AnnotationFormat::kPolyTxt: return "poly_txt";
    case AnnotationFormat::kJson: return "json";
  }
  return "";
}

std::optional<AnnotationFormat> annotation_format_from_name(std::string_view name) {
  if (name == "ic15_quad" || name == "ic15") return AnnotationFormat::kIc15Quad;
  if (name == "poly_txt" || name == "poly") return AnnotationFormat::kPolyTxt;
  if (name == "json") return AnnotationFormat::kJson;
  return std::nullopt;
}

std::vector<TextInstance> parse_ic15_gt(std::string_view text) {
  std::vector<TextInstance> out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_commas(line, 9);
    if (fields.size() < 9) {
      parse_failure(number, "expected 8 coordinates and a transcription, got " +
                                std::to_string(fields.size()) + " fields");
    }
    TextInstance inst = validated(polygon_from(std::span(fields).first(8), number), number);
    inst.transcription = std::string(fields[8]);
    inst.ignore = trim(fields[8]) == kIgnoreMarker;
    out.push_back(std::move(inst));
  });
  return out;
}

std::vector<TextInstance> parse_poly_gt(std::string_view text) {
  std::vector<TextInstance> out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    auto fields = split_commas(trim(line), std::string_view::npos);
    bool ignore = false;
    if (!fields.empty() && trim(fields.back()) == kIgnoreMarker) {
      ignore = true;
      fields.pop_back();
    }
    if (fields.size() % 2 != 0) {
      parse_failure(number, "odd coordinate count " + std::to_string(fields.size()));
    }
    if (fields.size() < 6) parse_failure(number, "polygon needs at least 3 vertices");
    TextInstance inst = validated(polygon_from(fields, number), number);
    inst.ignore = ignore;
    out.push_back(std::move(inst));
  });
  return out;
}

ParsedPredictions parse_predictions(std::string_view text) {
  ParsedPredictions out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = trim(line);
    auto fields = split_commas(line, std::string_view::npos);
    std::optional<std::string> transcription;
    std::size_t numeric = 0;
    while (numeric < fields.size() && to_number(fields[numeric])) ++numeric;
    if (numeric < fields.size()) {
      // Everything from the first non-numeric field on, commas included.
      const auto start = static_cast<std::size_t>(fields[numeric].data() - line.data());
      transcription = std::string(trim(line.substr(start)));
      fields.resize(numeric);
    }
    std::optional<double> confidence;
    if (fields.size() % 2 != 0) {
      const double c = require_number(fields.back(), number);
      if (!(c >= 0.0 && c <= 1.0)) {
        throw Error(ErrorKind::kConfidenceOutOfRange,
                    "line " + std::to_string(number) + ": confidence " +
                        std::string(trim(fields.back())) + " outside [0, 1]");
      }
      confidence = c;
      fields.pop_back();
    }
    if (fields.size() < 6) parse_failure(number, "polygon needs at least 3 vertices");
    Polygon p = polygon_from(fields, number);
    if (auto problem = polygon_problem(p); !problem.empty()) {
      out.warnings.push_back("line " + std::to_string(number) + ": " + problem +
                             " rejected");
      return;
    }
    out.predictions.push_back(
        {TextInstance{canonicalize(std::move(p)), false, std::move(transcription)}, confidence});
  });
  return out;
}

JsonAnnotations parse_json_annotations(std::string_view text) {
  json doc;
  try {
    doc = json::parse(strip_bom(text));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  JsonAnnotations out;
  try {
    out.image_id = doc.value("image_id", std::string{});
    const auto& instances = doc.at("instances");
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& item = instances[i];
      Polygon p;
      for (const auto& v : item.at("polygon")) {
        if (v.size() != 2) parse_failure(i + 1, "vertex must be [x, y]");
        p.push_back({v[0].get<double>(), v[1].get<double>()});
      }
      TextInstance inst = validated(std::move(p), i + 1);
      inst.ignore = item.value("ignore", false);
      if (item.contains("transcription") && !item["transcription"].is_null())
        inst.transcription = item["transcription"].get<std::string>();
      std::optional<double> confidence;
      if (item.contains("confidence") && !item["confidence"].is_null()) {
        confidence = item["confidence"].get<double>();
        if (!(*confidence >= 0.0 && *confidence <= 1.0)) {
          throw Error(ErrorKind::kConfidenceOutOfRange,
                      "instance " + std::to_string(i + 1) + ": confidence outside [0, 1]");
        }
      }
      out.instances.push_back({std::move(inst), confidence});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed annotation JSON: ") + e.what());
  }
  return out;
}

std::string write_gt(std::span<const TextInstance> instances, AnnotationFormat format,
                     std::string_view image_id) {
  std::string out;
  switch (format) {
    case AnnotationFormat::kIc15Quad:
      for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        if (inst.polygon.size() != 4) {
          throw Error(ErrorKind::kFormatIncompatible,
                      "instance " + std::to_string(i + 1) + " has " +
                          std::to_string(inst.polygon.size()) +
                          " vertices; ic15_quad needs 4");
        }
        append_polygon(out, inst.polygon);
        out += ',';
        out += inst.ignore ? std::string(kIgnoreMarker) : inst.transcription.value_or("");
        out += '\n';
      }
      return out;
    case AnnotationFormat::kPolyTxt:
      for (const auto& inst : instances) {
        append_polygon(out, inst.polygon);
        if (inst.ignore) {
          out += ',';
          out += kIgnoreMarker;
        }
        out += '\n';
      }
      return out;
    case AnnotationFormat::kJson: {
      json doc;
      doc["image_id"] = std::string(image_id);
      doc["instances"] = json::array();
      for (const auto& inst : instances) {
        json poly = json::array();
        for (const Point& p : inst.polygon) poly.push_back({round2(p.x), round2(p.y)});
        json item;
        item["polygon"] = std::move(poly);
        item["ignore"] = inst.ignore;
        item["transcription"] =
            inst.transcription ? json(*inst.transcription) : json(nullptr);
        item["confidence"] = nullptr;
        doc["instances"].push_back(std::move(item));
      }
      return doc.dump(2) + "\n";
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown annotation format");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
}

std::vector<TextInstance> load_ground_truth(const std::filesystem::path& path,
                                            AnnotationFormat format) {
  const std::string text = read_text_file(path);
  try {
    switch (format) {
      case AnnotationFormat::kIc15Quad: return parse_ic15_gt(text);
      case AnnotationFormat::kPolyTxt: return parse_poly_gt(text);
      case AnnotationFormat::kJson: {
        std::vector<TextInstance> out;
        for (auto& p : parse_json_annotations(text).instances) out.push_back(std::move(p.instance));
        return out;
      }
    }
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown annotation format");
}

ParsedPredictions load_predictions(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    if (path.extension() == ".json") {
      return ParsedPredictions{parse_json_annotations(text).instances, {}};
    }
    ParsedPredictions parsed = parse_predictions(text);
    for (auto& w : parsed.warnings) w = path.string() + ": " + w;
    return parsed;
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

}  // namespace strb
