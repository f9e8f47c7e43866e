#include "strb/evaluation.hpp"

#include <algorithm>
#include <vector>

#include "strb/error.hpp"
#include "strb/geometry.hpp"

namespace strb {

void EvalConfig::validate() const {
  const auto in_range = [](double v) { return v > 0.0 && v <= 1.0; };
  if (!in_range(iou_threshold)) {
    throw Error(ErrorKind::kInvalidArgument, "iou threshold must be in (0, 1]");
  }
  if (!in_range(ignore_overlap_threshold)) {
    throw Error(ErrorKind::kInvalidArgument, "ignore overlap threshold must be in (0, 1]");
  }
}

MatchCounts match_instances(std::span<const TextInstance> predictions,
                            std::span<const TextInstance> ground_truth,
                            const EvalConfig& cfg) {
  cfg.validate();

  std::vector<const Polygon*> gts;
  std::vector<const Polygon*> ignored;
  for (const auto& g : ground_truth) (g.ignore ? ignored : gts).push_back(&g.polygon);

  std::vector<const Polygon*> preds;
  for (const auto& p : predictions) {
    const double own = polygon_area(p.polygon);
    if (own <= 0.0) continue;
    const bool dont_care = std::any_of(ignored.begin(), ignored.end(), [&](const Polygon* g) {
      return polygon_intersection_area(p.polygon, *g) / own > cfg.ignore_overlap_threshold;
    });
    if (!dont_care) preds.push_back(&p.polygon);
  }

  struct Candidate {
    double iou;
    const Polygon* pred;
    const Polygon* gt;
    std::size_t pi;
    std::size_t gi;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t j = 0; j < gts.size(); ++j) {
      const double v = iou(*preds[i], *gts[j]);
      if (v >= cfg.iou_threshold) candidates.push_back({v, preds[i], gts[j], i, j});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    if (*a.pred != *b.pred) return *a.pred < *b.pred;
    return *a.gt < *b.gt;
  });

  std::vector<bool> pred_used(preds.size(), false);
  std::vector<bool> gt_used(gts.size(), false);
  MatchCounts counts{0, preds.size(), gts.size()};
  for (const auto& c : candidates) {
    if (pred_used[c.pi] || gt_used[c.gi]) continue;
    pred_used[c.pi] = gt_used[c.gi] = true;
    ++counts.true_positives;
  }
  return counts;
}

ScoreTriple score(const MatchCounts& counts) {
  const auto tp = static_cast<double>(counts.true_positives);
  ScoreTriple s;
  if (counts.num_predictions == 0 && counts.num_ground_truth == 0) return {1.0, 1.0, 1.0};
  s.precision = counts.num_predictions == 0 ? 0.0 : tp / static_cast<double>(counts.num_predictions);
  s.recall = counts.num_ground_truth == 0 ? 1.0 : tp / static_cast<double>(counts.num_ground_truth);
  const double sum = s.precision + s.recall;
  s.f_measure = sum > 0.0 ? 2.0 * s.precision * s.recall / sum : 0.0;
  return s;
}

ScoreTriple eval_dataset(std::span<const MatchCounts> per_image) {
  MatchCounts total;
  for (const auto& c : per_image) total += c;
  return score(total);
}

}  // namespace strb
