#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strb/annotations.hpp"
#include "strb/catalog.hpp"
#include "strb/evaluation.hpp"
#include "strb/robustness.hpp"

namespace strb {

enum class Command { kCorrupt, kAugment, kEval, kReport };

struct RunConfig {
  Command command = Command::kCorrupt;
  std::filesystem::path input_root;   // dataset, or eval results for report
  std::filesystem::path output_root;  // eval: optional JSON file or tree root
  AnnotationFormat format = AnnotationFormat::kIc15Quad;
  std::vector<CorruptionId> corruptions;  // empty = all 18
  std::vector<int> severities;            // empty = 1..5
  std::uint64_t master_seed = 0;
  int jobs = 0;  // 0 = processor count
  double iou_threshold = 0.5;
  double alpha = 0.5;
  std::filesystem::path bg_pool;
  double apply_prob = 1.0;
  std::filesystem::path predictions_root;
  std::optional<std::filesystem::path> clean_eval;  // report: clean eval.json
  std::string label;                                // report: row label

  std::vector<CorruptionId> selected_corruptions() const;
  std::vector<int> selected_severities() const;
  int worker_count() const;

  /// Throws kInvalidArgument for out-of-range values or missing flags.
  void validate() const;
};

inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kEvalFile = "eval.json";

struct CorruptSummary {
  std::size_t images = 0;
  std::size_t variants = 0;
  std::size_t files_written = 0;
};

/// Writes <out>/<corruption>/<severity>/{images,gts} and <out>/manifest.json.
/// The manifest is written with "complete": false before any image and
/// rewritten with true at the end, so a failed run stays marked incomplete.
CorruptSummary cmd_corrupt(const RunConfig& cfg, std::ostream& diag);

struct AugmentSummary {
  std::size_t images = 0;
  std::size_t mixed = 0;
};

/// One output per input image under <out>/{images,gts}. Images drawn for
/// mixing are saved as PNG; the rest and all GT files are copied verbatim.
AugmentSummary cmd_augment(const RunConfig& cfg, std::ostream& diag);

struct EvalResult {
  MatchCounts counts;
  ScoreTriple score;
  std::size_t images = 0;
};

/// Scores one dataset against a predictions folder. Per image the first of
/// <stem>.txt, res_<stem>.txt, gt_<stem>.txt, <stem>.json is read; none
/// means no detections. A file named like the dataset's GT file is parsed
/// with the GT grammar. A `gts/` subfolder of the predictions root is
/// searched instead of the root when present.
EvalResult evaluate_folder(const std::filesystem::path& dataset_root, AnnotationFormat format,
                           const std::filesystem::path& predictions_root, const EvalConfig& ecfg,
                           int jobs, std::ostream& diag);

std::string eval_result_json(const EvalResult& r);
EvalResult parse_eval_result(const std::filesystem::path& file);

/// Single dataset: JSON to `out` (or output_root when set). A corrupted tree
/// (input has manifest.json): one eval.json per variant under output_root,
/// with predictions read from <predictions_root>/<corruption>/<severity>.
void cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Reads <input>/<corruption>/<severity>/eval.json for the whole grid and the
/// clean result, writes report.{csv,md,json} to output_root and prints the
/// markdown table to `out`.
RobustnessReport cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// 1 for validation errors, 2 for everything else.
int exit_code_for(const std::exception& e);

}  // namespace strb
