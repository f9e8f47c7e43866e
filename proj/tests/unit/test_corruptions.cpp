#include <gtest/gtest.h>

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "golden.hpp"
#include "strb/corruptions.hpp"
#include "strb/error.hpp"
#include "strb/evaluation.hpp"
#include "strb/image_io.hpp"
#include "strb/imaging.hpp"
#include "support.hpp"

namespace strb {
namespace {

const SeedSpec kSeed{2024, "img_0", 0, 0};

SeedSpec seed_for(CorruptionId id) {
  SeedSpec s = kSeed;
  s.stream = static_cast<std::uint32_t>(index_of(id));
  return s;
}

ImageBuffer scene(int w = 80, int h = 60, std::uint64_t seed = 1) {
  return testing::synthetic_scene(w, h, seed).image;
}

double changed_fraction(const ImageBuffer& a, const ImageBuffer& b, int threshold) {
  std::size_t changed = 0;
  const auto sa = a.samples(), sb = b.samples();
  for (std::size_t p = 0; p < sa.size(); p += 3) {
    int diff = 0;
    for (int c = 0; c < 3; ++c) diff = std::max(diff, std::abs(sa[p + c] - sb[p + c]));
    if (diff > threshold) ++changed;
  }
  return static_cast<double>(changed) / (sa.size() / 3);
}

TEST(Corruptions, SeverityZeroIsIdentity) {
  const auto img = scene();
  for (const auto& e : list_corruptions()) {
    const auto r = apply_corruption(img, e.id, 0, seed_for(e.id));
    EXPECT_EQ(r.image, img) << name_of(e.id);
    EXPECT_TRUE(r.gt_transform.is_identity()) << name_of(e.id);
  }
}

TEST(Corruptions, DeterministicAcrossRunsAndThreadCounts) {
  const auto img = scene(64, 48, 2);
  for (const auto& e : list_corruptions()) {
    omp_set_num_threads(1);
    const auto a = apply_corruption(img, e.id, 3, seed_for(e.id));
    omp_set_num_threads(4);
    const auto b = apply_corruption(img, e.id, 3, seed_for(e.id));
    const auto c = apply_corruption(img, e.id, 3, seed_for(e.id));
    EXPECT_EQ(a.image, b.image) << name_of(e.id);
    EXPECT_EQ(b.image, c.image) << name_of(e.id);
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST(Corruptions, SeedMatters) {
  const auto img = scene();
  SeedSpec other = seed_for(CorruptionId::kGaussianNoise);
  other.image_id = "img_1";
  EXPECT_NE(apply_corruption(img, CorruptionId::kGaussianNoise, 2, seed_for(CorruptionId::kGaussianNoise)).image,
            apply_corruption(img, CorruptionId::kGaussianNoise, 2, other).image);
}

TEST(Corruptions, DimensionsAndTransforms) {
  const auto img = scene(70, 40);
  for (const auto& e : list_corruptions()) {
    for (int s = 1; s <= 5; ++s) {
      const auto r = apply_corruption(img, e.id, s, seed_for(e.id));
      if (e.id == CorruptionId::kRotation) {
        EXPECT_GT(r.image.width() * r.image.height(), 70 * 40);
        EXPECT_FALSE(r.gt_transform.is_identity());
      } else {
        EXPECT_EQ(r.image.width(), 70) << name_of(e.id);
        EXPECT_EQ(r.image.height(), 40) << name_of(e.id);
        EXPECT_TRUE(r.gt_transform.is_identity()) << name_of(e.id);
      }
    }
  }
}

TEST(Corruptions, InvalidSeverityRejected) {
  EXPECT_THROW(apply_corruption(scene(), CorruptionId::kFog, 6, kSeed), Error);
  EXPECT_THROW(apply_corruption(scene(), CorruptionId::kFog, -1, kSeed), Error);
}

TEST(GaussianNoise, VarianceMatchesCatalogSigma) {
  const int n = 512;
  const ImageBuffer gray(n, n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n * 3, 128));
  const auto out = apply_corruption(gray, CorruptionId::kGaussianNoise, 1, kSeed).image;
  double sum = 0.0, sq = 0.0;
  const auto s = out.samples();
  for (auto v : s) {
    const double d = static_cast<double>(v) - 128.0;
    sum += d;
    sq += d * d;
  }
  const double mean = sum / s.size();
  const double var = sq / s.size() - mean * mean;
  const double expected = std::pow(gaussian_noise_params(1).sigma * 255.0, 2);
  EXPECT_NEAR(var / expected, 1.0, 0.02);
}

TEST(Corruptions, MedianPsnrNonIncreasingInSeverity) {
  std::vector<ImageBuffer> corpus;
  for (std::uint64_t k = 0; k < 10; ++k) corpus.push_back(scene(96, 72, 100 + k));
  for (const auto& e : list_corruptions()) {
    if (e.category == Category::kGeometry) continue;
    double previous = kInfiniteDb;
    for (int s = 1; s <= 5; ++s) {
      std::vector<double> values;
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        const SeedSpec seed{7, "img_" + std::to_string(k), static_cast<std::uint32_t>(index_of(e.id)), s};
        values.push_back(psnr(apply_corruption(corpus[k], e.id, s, seed).image, corpus[k]));
      }
      std::nth_element(values.begin(), values.begin() + 5, values.end());
      const double hi = values[5];
      const double lo = *std::max_element(values.begin(), values.begin() + 5);
      const double median = 0.5 * (lo + hi);
      EXPECT_LE(median, previous) << name_of(e.id) << " severity " << s;
      previous = median;
    }
  }
}

TEST(Dirty, MoreStainsAtHigherSeverity) {
  const auto img = scene(128, 96, 3);
  const auto s1 = corrupt_dirty(img, 1, kSeed).image;
  const auto s5 = corrupt_dirty(img, 5, kSeed).image;
  EXPECT_GT(changed_fraction(img, s5, 8), changed_fraction(img, s1, 8));
  EXPECT_EQ(corrupt_dirty(img, 4, kSeed).image, corrupt_dirty(img, 4, kSeed).image);
}

TEST(Dirty, TransparentBlobsAreIdentity) {
  const auto img = scene(64, 64, 4);
  DirtyParams p = dirty_params(5);
  p.opacity = 0.0;
  EXPECT_EQ(corrupt_dirty(img, p, kSeed).image, img);
}

TEST(Lines, StrokeCountFollowsCatalog) {
  const auto img = scene(100, 80, 5);
  for (int s = 1; s <= 5; ++s) {
    const auto traced = corrupt_lines_traced(img, lines_params(s), kSeed);
    EXPECT_EQ(static_cast<int>(traced.strokes.size()), lines_params(s).stroke_count);
    const double wmax = lines_params(s).width_max_frac * 80;
    for (const auto& st : traced.strokes) {
      EXPECT_GE(st.width, lines_params(s).width_min_px - 1e-12);
      EXPECT_LE(st.width, std::max(wmax, lines_params(s).width_min_px) + 1e-12);
    }
  }
  EXPECT_EQ(corrupt_lines(img, 1, kSeed).image.samples().size(), img.samples().size());
}

TEST(Lines, StrokesStartAndEndOnTheBorder) {
  const auto traced = corrupt_lines_traced(scene(90, 70, 6), lines_params(5), kSeed);
  const auto on_border = [](Point p) {
    return std::abs(p.x) < 1e-9 || std::abs(p.y) < 1e-9 || std::abs(p.x - 90) < 1e-9 ||
           std::abs(p.y - 70) < 1e-9;
  };
  for (const auto& st : traced.strokes) {
    EXPECT_TRUE(on_border(st.from));
    EXPECT_TRUE(on_border(st.to));
  }
}

TEST(Lines, ZeroStrokesIsIdentity) {
  const auto img = scene(64, 64, 7);
  LinesParams p = lines_params(3);
  p.stroke_count = 0;
  const auto traced = corrupt_lines_traced(img, p, kSeed);
  EXPECT_EQ(traced.result.image, img);
  EXPECT_TRUE(traced.strokes.empty());
}

TEST(Rotation, CornersLandOnNewCanvasBorder) {
  for (int s = 1; s <= 5; ++s) {
    const auto r = corrupt_rotation(scene(90, 50, 8), s, kSeed);
    const double w = r.image.width(), h = r.image.height();
    double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
    for (Point c : {Point{0, 0}, Point{90, 0}, Point{90, 50}, Point{0, 50}}) {
      const Point q = r.gt_transform.apply(c);
      EXPECT_GE(q.x, -1e-9);
      EXPECT_GE(q.y, -1e-9);
      EXPECT_LE(q.x, w + 1e-9);
      EXPECT_LE(q.y, h + 1e-9);
      min_x = std::min(min_x, q.x), max_x = std::max(max_x, q.x);
      min_y = std::min(min_y, q.y), max_y = std::max(max_y, q.y);
    }
    EXPECT_LE(min_x, 0.5);
    EXPECT_LE(min_y, 0.5);
    EXPECT_GE(max_x, w - 0.5);
    EXPECT_GE(max_y, h - 0.5);
  }
}

TEST(Rotation, LinearPartIsARotation) {
  for (int s = 1; s <= 5; ++s) {
    const auto m = corrupt_rotation(scene(), s, kSeed).gt_transform.m;
    const double a = m[0], b = m[1], c = m[3], d = m[4];
    EXPECT_NEAR(a * a + c * c, 1.0, 1e-12);
    EXPECT_NEAR(b * b + d * d, 1.0, 1e-12);
    EXPECT_NEAR(a * b + c * d, 0.0, 1e-12);
    EXPECT_NEAR(a * d - b * c, 1.0, 1e-12);
    const double angle = std::abs(std::atan2(c, a)) * 180.0 / std::acos(-1.0);
    EXPECT_NEAR(angle, rotation_params(s).angle_deg, 1e-9);
  }
}

TEST(Rotation, ZeroAngleIsIdentity) {
  const auto img = scene(40, 30);
  const auto r = corrupt_rotation(img, RotationParams{0.0});
  EXPECT_TRUE(r.gt_transform.is_identity());
  EXPECT_EQ(r.image, img);
}

TEST(Rotation, TransformedGroundTruthMatchesItself) {
  const auto sc = testing::synthetic_scene(120, 90, 9);
  for (int s = 1; s <= 5; ++s) {
    const auto r = corrupt_rotation(sc.image, s, kSeed);
    std::vector<TextInstance> moved = sc.labels;
    for (auto& inst : moved) inst.polygon = r.gt_transform.apply(inst.polygon);
    EXPECT_DOUBLE_EQ(score(match_instances(moved, moved)).f_measure, 1.0);
  }
}

TEST(Jpeg, MatchesGoldenFiles) {
  const auto source = testing::golden_source();
  for (int s = 1; s <= 5; ++s) {
    const auto out = apply_corruption(source, CorruptionId::kJpeg, s, testing::golden_seed()).image;
    const auto golden =
        load_image(std::filesystem::path(STRB_GOLDEN_DIR) / testing::golden_name(s));
    EXPECT_GE(psnr(out, golden), 45.0) << "severity " << s;
  }
}

}  // namespace
}  // namespace strb
