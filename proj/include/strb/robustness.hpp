#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strb/catalog.hpp"

namespace strb {

/// F-measures for the clean set and every (corruption, severity) cell.
class FGrid {
 public:
  explicit FGrid(double f_clean = 0.0) : f_clean_(f_clean) {}

  double f_clean() const { return f_clean_; }
  void set_clean(double f) { f_clean_ = f; }

  void set(CorruptionId id, int severity, double f);
  std::optional<double> get(CorruptionId id, int severity) const;

  /// Sets all five severities of a corruption to `f`.
  void fill(CorruptionId id, double f);

  /// "<corruption>/<severity>" for every empty cell, in canonical order.
  std::vector<std::string> missing_cells() const;
  bool complete() const { return missing_cells().empty(); }

 private:
  double f_clean_;
  std::array<std::array<std::optional<double>, kNumSeverities>, kNumCorruptions> cells_{};
};

/// Mean over severities for one corruption; requires its five cells.
double corruption_mean(const FGrid& grid, CorruptionId id);

/// Mean of the 18 per-corruption means; kIncompleteGrid names missing cells.
double compute_mpc(const FGrid& grid);

/// mpc / f_clean; kDivisionByZeroClean when f_clean <= 0.
double compute_rpc(double mpc, double f_clean);

/// Indexed by Category: mean of the member corruptions' means.
std::array<double, kNumCategories> category_means(const FGrid& grid);

struct RobustnessReport {
  std::string label;
  double clean = 0.0;
  std::array<double, kNumCategories> category_means{};
  std::array<double, kNumCorruptions> per_corruption_means{};
  double mpc = 0.0;
  double rpc = 0.0;
};

RobustnessReport build_report(const FGrid& grid, std::string label = {});

enum class ReportFormat { kCsv, kMarkdown };

/// Header plus one row per report: Clean, N., B., W., D., G., mPC, rPC as
/// percentages with one decimal. A leading label column appears when any
/// report has a non-empty label.
std::string render_report(const std::vector<RobustnessReport>& reports, ReportFormat format);
std::string render_report(const RobustnessReport& report, ReportFormat format);

/// {clean, per_corruption: {name: [f1..f5]}, category_means, mpc, rpc}.
std::string render_report_json(const FGrid& grid, const RobustnessReport& report);

/// Percentage with one decimal, ties to even (0.4725 -> "47.2").
std::string format_percent(double fraction);

}  // namespace strb
