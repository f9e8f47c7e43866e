#include <gtest/gtest.h>

#include <omp.h>

#include <algorithm>
#include <cstring>

#include "strb/kernels.hpp"
#include "strb/rng.hpp"
#include "support.hpp"

namespace strb {
namespace {

FloatImage random_image(int w, int h, std::uint64_t seed) {
  FloatImage img(w, h);
  const RandomStream rng(seed);
  auto s = img.samples();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<float>(rng.uniform_at(i));
  return img;
}

bool bit_equal(std::span<const float> a, std::span<const float> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size_bytes()) == 0;
}

class KernelParity : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { omp_set_num_threads(GetParam()); }
  void TearDown() override { omp_set_num_threads(omp_get_num_procs()); }
};

TEST_P(KernelParity, Convolve) {
  const auto img = random_image(37, 23, 1);
  Kernel2D k{5, 3, {}};
  for (int i = 0; i < 15; ++i) k.weights.push_back(i % 4 == 0 ? 0.0f : 0.01f * (i + 1));
  EXPECT_TRUE(bit_equal(kernels::serial::convolve(img, k).samples(),
                        kernels::parallel::convolve(img, k).samples()));
}

TEST_P(KernelParity, Separable) {
  const auto img = random_image(41, 19, 2);
  const auto taps = gaussian_taps(1.7);
  EXPECT_TRUE(bit_equal(kernels::serial::convolve_separable(img, taps, taps).samples(),
                        kernels::parallel::convolve_separable(img, taps, taps).samples()));
}

TEST_P(KernelParity, Resize) {
  const auto img = random_image(33, 21, 3);
  for (auto [w, h] : {std::pair{10, 7}, {70, 45}, {33, 21}}) {
    EXPECT_TRUE(bit_equal(kernels::serial::resize_bilinear(img, w, h).samples(),
                          kernels::parallel::resize_bilinear(img, w, h).samples()));
  }
}

TEST_P(KernelParity, Remap) {
  const auto img = random_image(30, 20, 4);
  Plane mx(30, 20), my(30, 20);
  const RandomStream rng(9);
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 30; ++x) {
      const auto i = static_cast<std::uint64_t>(y * 30 + x);
      mx.at(x, y) = static_cast<float>(x + 6.0 * (rng.uniform_at(2 * i) - 0.5) * 3);
      my.at(x, y) = static_cast<float>(y + 6.0 * (rng.uniform_at(2 * i + 1) - 0.5) * 3);
    }
  }
  EXPECT_TRUE(bit_equal(kernels::serial::remap_bilinear(img, mx, my).samples(),
                        kernels::parallel::remap_bilinear(img, mx, my).samples()));
}

TEST_P(KernelParity, BlendAndBlur) {
  const auto a = random_image(25, 18, 5), b = random_image(25, 18, 6);
  EXPECT_TRUE(bit_equal(kernels::serial::blend(a, b, 0.3f).samples(),
                        kernels::parallel::blend(a, b, 0.3f).samples()));
  Plane p(25, 18);
  const RandomStream rng(10);
  for (std::size_t i = 0; i < p.values().size(); ++i) p.values()[i] = static_cast<float>(rng.uniform_at(i));
  const auto taps = gaussian_taps(2.0);
  EXPECT_TRUE(bit_equal(kernels::serial::blur_plane(p, taps).values(),
                        kernels::parallel::blur_plane(p, taps).values()));
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelParity, ::testing::Values(1, 3, 8));

TEST(Kernels, Reflect101) {
  const int n = 5;
  EXPECT_EQ(reflect101(-1, n), 1);
  EXPECT_EQ(reflect101(-2, n), 2);
  EXPECT_EQ(reflect101(5, n), 3);
  EXPECT_EQ(reflect101(6, n), 2);
  EXPECT_EQ(reflect101(13, n), 3);
  EXPECT_EQ(reflect101(-7, 1), 0);
  for (int i = -20; i < 20; ++i) {
    const int r = reflect101(i, n);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, n);
  }
}

TEST(Kernels, GaussianTapsNormalized) {
  for (double sigma : {0.5, 1.0, 3.3}) {
    const auto taps = gaussian_taps(sigma);
    EXPECT_EQ(taps.size() % 2, 1u);
    double sum = 0.0;
    for (float t : taps) sum += t;
    EXPECT_NEAR(sum, 1.0, 1e-6);
    EXPECT_TRUE(std::equal(taps.begin(), taps.end(), taps.rbegin()));
  }
}

TEST(Kernels, SumSquaredDifference) {
  const std::vector<std::uint8_t> a = {0, 10, 20, 30, 40, 50};
  const std::vector<std::uint8_t> b = {1, 10, 18, 30, 40, 53};
  EXPECT_DOUBLE_EQ(sum_squared_difference(a, b, 3), 1.0 + 4.0 + 9.0);
}

}  // namespace
}  // namespace strb
