#pragma once

#include <cstddef>
#include <span>

#include "strb/annotations.hpp"

namespace strb {

struct EvalConfig {
  double iou_threshold = 0.5;
  double ignore_overlap_threshold = 0.5;  // intersection over prediction area

  /// Throws kInvalidArgument unless both thresholds lie in (0, 1].
  void validate() const;
};

struct MatchCounts {
  std::size_t true_positives = 0;
  std::size_t num_predictions = 0;   // after don't-care filtering
  std::size_t num_ground_truth = 0;  // non-ignored only

  MatchCounts& operator+=(const MatchCounts& o) {
    true_positives += o.true_positives;
    num_predictions += o.num_predictions;
    num_ground_truth += o.num_ground_truth;
    return *this;
  }
  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

/// Drops predictions overlapping an ignored GT by more than the configured
/// fraction of their own area, then matches one-to-one greedily in descending
/// IoU order. Equal IoUs are ordered by (prediction, GT) polygon comparison,
/// so the result does not depend on input order.
MatchCounts match_instances(std::span<const TextInstance> predictions,
                            std::span<const TextInstance> ground_truth,
                            const EvalConfig& cfg = {});

/// Empty-empty scores 1/1/1. With no ground truth recall is 1; with no
/// predictions precision is 0.
ScoreTriple score(const MatchCounts& counts);

/// Micro-average: sums counts, then scores.
ScoreTriple eval_dataset(std::span<const MatchCounts> per_image);

}  // namespace strb
