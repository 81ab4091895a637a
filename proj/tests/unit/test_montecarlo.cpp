#include <cmath>

#include <gtest/gtest.h>

#include "altseq/error.hpp"
#include "altseq/montecarlo.hpp"

namespace altseq {
namespace {

TEST(EmpiricalHistogram, SinglePoint) {
  const auto h = empirical_histogram(1, 100, 42);
  EXPECT_EQ(h.counts, std::vector<std::uint64_t>{100});
  EXPECT_EQ(h.samples, 100u);
  EXPECT_EQ(h.seed, 42u);
}

TEST(EmpiricalHistogram, DeterministicAndThreadIndependent) {
  const auto a = empirical_histogram(8, 150000, 7);
  const auto b = empirical_histogram(8, 150000, 7);
  const auto c = empirical_histogram(8, 150000, 7, kDefaultConvention, 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_NE(a, empirical_histogram(8, 150000, 8));
  std::uint64_t total = 0;
  for (auto x : a.counts) total += x;
  EXPECT_EQ(total, 150000u);
}

TEST(EmpiricalHistogram, Errors) {
  EXPECT_THROW(empirical_histogram(0, 10, 1), InvalidArgument);
  EXPECT_THROW(empirical_histogram(3, 0, 1), InvalidArgument);
}

TEST(TvDistance, ExactProportionsGiveZero) {
  EmpiricalHistogram h{3, 6, 0, kDefaultConvention, {1, 3, 2}};
  EXPECT_EQ(tv_distance(h, distribution_dp(3)), 0.0);
  EmpiricalHistogram scaled{3, 60, 0, kDefaultConvention, {10, 30, 20}};
  EXPECT_EQ(tv_distance(scaled, distribution_dp(3)), 0.0);
  EXPECT_EQ(tv_distance(h, scaled), 0.0);
}

TEST(TvDistance, DisjointSupportsGiveOne) {
  EmpiricalHistogram a{3, 5, 0, kDefaultConvention, {5, 0, 0}};
  EmpiricalHistogram b{3, 9, 0, kDefaultConvention, {0, 4, 5}};
  EXPECT_EQ(tv_distance(a, b), 1.0);
  EXPECT_THROW(tv_distance(a, distribution_dp(4)), InvalidArgument);
}

TEST(TvDistance, TriangleInequality) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = empirical_histogram(6, 500, seed);
    const auto b = empirical_histogram(6, 800, seed + 100);
    const auto c = empirical_histogram(6, 300, seed + 200);
    EXPECT_LE(tv_distance(a, c), tv_distance(a, b) + tv_distance(b, c) + 1e-15);
    EXPECT_DOUBLE_EQ(tv_distance(a, b), tv_distance(b, a));
  }
}

TEST(TvDistance, ShrinksWithMoreSamples) {
  const auto exact = distribution_dp(6);
  double small = 0;
  double large = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    small += tv_distance(empirical_histogram(6, 1000, seed), exact);
    large += tv_distance(empirical_histogram(6, 10000, seed), exact);
  }
  EXPECT_LT(large, small);
}

TEST(TvDistance, MonteCarloMatchesExactLaw) {
  const auto h = empirical_histogram(8, 200000, 1);
  EXPECT_LE(tv_distance(h, distribution_dp(8)), 0.01);
}

TEST(NormalCdf, ReferenceValues) {
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-16);
  EXPECT_NEAR(normal_cdf(1.0), 0.8413447460685429, 1e-15);
  EXPECT_NEAR(normal_cdf(-3.0), 0.0013498980316300946, 1e-16);
  EXPECT_NEAR(normal_cdf(-8.0), 6.22096057427178e-16, 1e-28);
}

TEST(Kolmogorov, TwoPointLaw) {
  // X_2 is 1 or 2 with probability 1/2: z = -1, +1 and the worst gap is
  // 1/2 - Phi(-1) = Phi(1) - 1/2.
  const double d = kolmogorov_to_normal(distribution_dp(2));
  EXPECT_NEAR(d, 0.8413447460685429 - 0.5, 1e-14);
  EXPECT_GT(d, 0.0);
  EXPECT_LT(d, 1.0);
  EXPECT_THROW(kolmogorov_to_normal(distribution_dp(1)), InvalidArgument);
}

TEST(Kolmogorov, DecreasesWithN) {
  const auto family = distribution_family(200);
  double prev = 1.0;
  for (int n : {25, 50, 100, 200}) {
    const double d = kolmogorov_to_normal(family[static_cast<std::size_t>(n - 1)]);
    EXPECT_LT(d, prev) << n;
    prev = d;
  }
  EXPECT_LE(prev, 0.1);
}

}  // namespace
}  // namespace altseq
