#pragma once

#include <array>

#include "strb/catalog.hpp"
#include "strb/robustness.hpp"

namespace strb::testing {

/// Reference per-corruption F-measures (percent, canonical order) and the
/// matching summary rows: clean, N., B., W., D., G., mPC, rPC.
struct ReferenceRow {
  const char* label;
  std::array<double, kNumCorruptions> per_corruption;
  std::array<double, 8> summary;
};

inline const std::array<ReferenceRow, 3>& reference_rows() {
  static const std::array<ReferenceRow, 3> rows = {{
      {"msrcnn_ic15",
       {18.5, 16.7, 14.8, 28.7, 29.5, 38.2, 8.5, 46.5, 62.6, 75.8, 76.6, 64.7, 48.5, 66.5, 54.9,
        63.6, 55.5, 80.5},
       {82.5, 16.7, 26.2, 61.6, 62.4, 68.0, 47.2, 57.3}},
      {"fcenet_ic15",
       {22.7, 21.9, 14.1, 29.0, 34.2, 43.4, 13.6, 47.1, 66.6, 84.0, 79.8, 79.1, 56.9, 65.5, 57.1,
        65.7, 70.6, 83.1},
       {84.9, 19.6, 30.1, 65.9, 67.3, 76.8, 51.9, 61.1}},
      {"psenet_ic15",
       {24.6, 22.8, 17.5, 27.5, 33.9, 38.1, 8.2, 45.7, 59.3, 73.5, 75.4, 61.5, 60.0, 68.9, 53.4,
        60.1, 58.2, 77.4},
       {80.7, 21.6, 26.9, 59.5, 63.2, 67.8, 48.1, 59.6}},
  }};
  return rows;
}

/// Grid with every severity of a corruption set to its reference mean.
inline FGrid grid_from(const ReferenceRow& row) {
  FGrid grid(row.summary[0] / 100.0);
  for (const auto& e : list_corruptions()) {
    grid.fill(e.id, row.per_corruption[static_cast<std::size_t>(index_of(e.id))] / 100.0);
  }
  return grid;
}

}  // namespace strb::testing
