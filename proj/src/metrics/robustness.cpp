#include "strb/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "strb/error.hpp"

namespace strb {

namespace {

void check_cell(int severity) {
  if (severity < 1 || severity > kNumSeverities) {
    throw Error(ErrorKind::kInvalidArgument,
                "severity " + std::to_string(severity) + " outside 1..5");
  }
}

void require_complete(const FGrid& grid) {
  const auto missing = grid.missing_cells();
  if (missing.empty()) return;
  std::string msg = "incomplete grid, missing " + std::to_string(missing.size()) + " cell(s):";
  for (const auto& m : missing) msg += " " + m;
  throw Error(ErrorKind::kIncompleteGrid, msg);
}

constexpr std::array<std::string_view, 8> kColumns = {"Clean", "N.", "B.", "W.", "D.",
                                                      "G.",    "mPC", "rPC"};

std::array<double, 8> row_values(const RobustnessReport& r) {
  const auto& c = r.category_means;
  return {r.clean, c[0], c[1], c[2], c[3], c[4], r.mpc, r.rpc};
}

}  // namespace

void FGrid::set(CorruptionId id, int severity, double f) {
  check_cell(severity);
  cells_[static_cast<std::size_t>(index_of(id))][static_cast<std::size_t>(severity - 1)] = f;
}

std::optional<double> FGrid::get(CorruptionId id, int severity) const {
  check_cell(severity);
  return cells_[static_cast<std::size_t>(index_of(id))][static_cast<std::size_t>(severity - 1)];
}

void FGrid::fill(CorruptionId id, double f) {
  for (int s = 1; s <= kNumSeverities; ++s) set(id, s, f);
}

std::vector<std::string> FGrid::missing_cells() const {
  std::vector<std::string> out;
  for (const auto& entry : list_corruptions()) {
    for (int s = 1; s <= kNumSeverities; ++s) {
      if (!get(entry.id, s)) out.push_back(std::string(name_of(entry.id)) + "/" + std::to_string(s));
    }
  }
  return out;
}

double corruption_mean(const FGrid& grid, CorruptionId id) {
  double sum = 0.0;
  for (int s = 1; s <= kNumSeverities; ++s) {
    const auto v = grid.get(id, s);
    if (!v) {
      throw Error(ErrorKind::kIncompleteGrid, "incomplete grid, missing " +
                                                  std::string(name_of(id)) + "/" + std::to_string(s));
    }
    sum += *v;
  }
  return sum / kNumSeverities;
}

double compute_mpc(const FGrid& grid) {
  require_complete(grid);
  double sum = 0.0;
  for (const auto& entry : list_corruptions()) sum += corruption_mean(grid, entry.id);
  return sum / kNumCorruptions;
}

double compute_rpc(double mpc, double f_clean) {
  if (!(f_clean > 0.0)) {
    throw Error(ErrorKind::kDivisionByZeroClean, "clean F-measure must be positive for rPC");
  }
  return mpc / f_clean;
}

std::array<double, kNumCategories> category_means(const FGrid& grid) {
  require_complete(grid);
  std::array<double, kNumCategories> sums{};
  std::array<int, kNumCategories> counts{};
  for (const auto& entry : list_corruptions()) {
    const auto k = static_cast<std::size_t>(index_of(entry.category));
    sums[k] += corruption_mean(grid, entry.id);
    ++counts[k];
  }
  for (std::size_t k = 0; k < sums.size(); ++k) sums[k] /= counts[k];
  return sums;
}

RobustnessReport build_report(const FGrid& grid, std::string label) {
  RobustnessReport r;
  r.label = std::move(label);
  r.clean = grid.f_clean();
  r.category_means = category_means(grid);
  for (const auto& entry : list_corruptions()) {
    r.per_corruption_means[static_cast<std::size_t>(index_of(entry.id))] =
        corruption_mean(grid, entry.id);
  }
  r.mpc = compute_mpc(grid);
  r.rpc = compute_rpc(r.mpc, r.clean);
  return r;
}

std::string format_percent(double fraction) {
  const double tenths = std::nearbyint(fraction * 1000.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", tenths / 10.0 + 0.0);
  return buf;
}

std::string render_report(const std::vector<RobustnessReport>& reports, ReportFormat format) {
  const bool labelled = std::any_of(reports.begin(), reports.end(),
                                    [](const RobustnessReport& r) { return !r.label.empty(); });
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    if (labelled) out << "model,";
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << "\n";
    for (const auto& r : reports) {
      if (labelled) out << r.label << ",";
      const auto vals = row_values(r);
      for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << format_percent(vals[i]);
      out << "\n";
    }
    return out.str();
  }

  out << "|";
  if (labelled) out << " Model |";
  for (const auto c : kColumns) out << " " << c << " |";
  out << "\n|";
  if (labelled) out << "---|";
  for (std::size_t i = 0; i < kColumns.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& r : reports) {
    out << "|";
    if (labelled) out << " " << r.label << " |";
    for (const double v : row_values(r)) out << " " << format_percent(v) << " |";
    out << "\n";
  }
  return out.str();
}

std::string render_report(const RobustnessReport& report, ReportFormat format) {
  return render_report(std::vector<RobustnessReport>{report}, format);
}

std::string render_report_json(const FGrid& grid, const RobustnessReport& report) {
  nlohmann::ordered_json j;
  j["clean"] = report.clean;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto& entry : list_corruptions()) {
    auto& cells = per[std::string(name_of(entry.id))] = nlohmann::ordered_json::array();
    for (int s = 1; s <= kNumSeverities; ++s) cells.push_back(*grid.get(entry.id, s));
  }
  j["per_corruption"] = std::move(per);
  nlohmann::ordered_json cats = nlohmann::ordered_json::object();
  for (int k = 0; k < kNumCategories; ++k) {
    cats[std::string(name_of(static_cast<Category>(k)))] =
        report.category_means[static_cast<std::size_t>(k)];
  }
  j["category_means"] = std::move(cats);
  j["mpc"] = report.mpc;
  j["rpc"] = report.rpc;
  return j.dump(2) + "\n";
}

}  // namespace strb
