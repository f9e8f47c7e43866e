#include <gtest/gtest.h>

#include <unordered_set>

#include "strb/rng.hpp"

namespace strb {
namespace {

TEST(Rng, SameSpecSameDraws) {
  const SeedSpec spec{42, "img_7", 3, 2};
  auto a = derive_rng(spec);
  auto b = derive_rng(spec);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, SeverityChangesStream) {
  auto a = derive_rng({42, "img_7", 3, 2});
  auto b = derive_rng({42, "img_7", 3, 3});
  bool differs = false;
  for (int i = 0; i < 10; ++i) differs |= a.next_u64() != b.next_u64();
  EXPECT_TRUE(differs);
}

TEST(Rng, EveryFieldFeedsTheKey) {
  const SeedSpec base{1, "a", 2, 3};
  auto with = [&](auto mutate) {
    SeedSpec s = base;
    mutate(s);
    return derive_key(s);
  };
  const auto k = derive_key(base);
  EXPECT_NE(k, with([](SeedSpec& s) { s.master_seed = 2; }));
  EXPECT_NE(k, with([](SeedSpec& s) { s.image_id = "b"; }));
  EXPECT_NE(k, with([](SeedSpec& s) { s.image_id = std::string("a\0", 2); }));
  EXPECT_NE(k, with([](SeedSpec& s) { s.stream = 3; }));
  EXPECT_NE(k, with([](SeedSpec& s) { s.severity = 4; }));
}

TEST(Rng, NoKeyCollisionsOverAMillionTuples) {
  std::unordered_set<std::uint64_t> keys;
  keys.reserve(1'100'000);
  std::size_t n = 0;
  for (std::uint64_t master = 0; master < 4; ++master) {
    for (int img = 0; img < 2778; ++img) {
      const std::string id = "img_" + std::to_string(img);
      for (std::uint32_t c = 0; c < 18; ++c) {
        for (int s = 1; s <= 5; ++s) {
          keys.insert(derive_key({master, id, c, s}));
          ++n;
        }
      }
    }
  }
  ASSERT_GE(n, 1'000'000u);
  EXPECT_EQ(keys.size(), n);
}

TEST(Rng, NormalMoments) {
  auto rng = derive_rng({9, "moments", 0, 0});
  const int n = 1'000'000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.01);
}

TEST(Rng, UniformRangeAndIndexedAccess) {
  auto rng = derive_rng({5, "u", 1, 1});
  const RandomStream fixed = rng;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const double u = rng.next_uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u, fixed.uniform_at(i));
  }
  for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.next_below(7), 7u);
}

TEST(Rng, SubstreamsAreIndependentOfParentCounter) {
  auto rng = derive_rng({5, "s", 1, 1});
  const auto before = rng.substream(4).u64_at(0);
  rng.next_u64();
  EXPECT_EQ(rng.substream(4).u64_at(0), before);
  EXPECT_NE(rng.substream(4).u64_at(0), rng.substream(5).u64_at(0));
}

}  // namespace
}  // namespace strb
