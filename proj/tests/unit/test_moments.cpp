#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "altseq/error.hpp"
#include "altseq/moments.hpp"

namespace altseq {
namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

TEST(MomentsFromTable, SmallN) {
  const auto m4 = moments_from_table(distribution_dp(4));
  EXPECT_EQ(m4.mean, q(17, 6));
  EXPECT_EQ(m4.m(2), q(23, 36));
  EXPECT_EQ(m4.m(3), q(-5, 54));
  EXPECT_EQ(m4.q_odd(1), q(-10, 69));
  EXPECT_EQ(m4.alpha_even(1), 1);
  EXPECT_EQ(m4.q_odd(0), 0);

  const auto m3 = moments_from_table(distribution_dp(3));
  EXPECT_EQ(m3.mean, q(13, 6));
  EXPECT_EQ(m3.m(2), q(17, 36));
}

TEST(MomentsFromTable, ShapeOfTable) {
  const auto t = moments_from_table(distribution_dp(10), 12);
  EXPECT_EQ(t.central.size(), 13u);
  EXPECT_EQ(t.std_even.size(), 7u);   // alpha_0 .. alpha_12
  EXPECT_EQ(t.std_odd_q.size(), 6u);  // q_1 .. q_11
  const auto t5 = moments_from_table(distribution_dp(10), 5);
  EXPECT_EQ(t5.std_even.size(), 3u);
  EXPECT_EQ(t5.std_odd_q.size(), 3u);
}

// Moments straight from the permutations, without the DP.
TEST(MomentsFromTable, AgreesWithDirectEnumeration) {
  const int n = 6;
  std::vector<int> values;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    values.push_back(as_bruteforce(Permutation(v)));
  } while (std::next_permutation(v.begin(), v.end()));
  Rational mean = 0;
  for (int x : values) mean += x;
  mean /= static_cast<long>(values.size());
  const auto t = moments_from_table(distribution_dp(n), 6);
  EXPECT_EQ(t.mean, mean);
  for (int r = 2; r <= 6; ++r) {
    Rational m = 0;
    for (int x : values) {
      Rational d = x - mean;
      Rational p = 1;
      for (int i = 0; i < r; ++i) p *= d;
      m += p;
    }
    m /= static_cast<long>(values.size());
    EXPECT_EQ(t.m(r), m) << "r = " << r;
  }
}

TEST(MomentsFromTable, DegenerateAndInvalid) {
  const auto t = moments_from_table(distribution_dp(1));
  EXPECT_EQ(t.mean, 1);
  EXPECT_EQ(t.m(2), 0);
  EXPECT_FALSE(t.standardized);
  EXPECT_TRUE(t.std_even.empty());
  EXPECT_THROW(t.alpha_odd(1), InvalidArgument);
  EXPECT_THROW(moments_from_table(distribution_dp(4), 1), InvalidArgument);
  DistributionTable bad{3, kDefaultConvention, {BigInt(1)}};
  EXPECT_THROW(moments_from_table(bad), InvalidArgument);
}

TEST(MomentsFromTable, ClosedFormsHold) {
  const auto family = distribution_family(60);
  for (const auto& d : family) {
    const auto t = moments_from_table(d, 4);
    if (d.n >= 2) {
      EXPECT_EQ(t.mean, mean_formula(d.n)) << d.n;
      EXPECT_EQ(t.alpha_even(1), 1);
      EXPECT_EQ(t.q_odd(0), 0);
    }
    if (d.n >= 4) {
      EXPECT_EQ(t.m(2), variance_formula(d.n)) << d.n;
    }
  }
}

TEST(MomentsFromTable, AlphaOddRendering) {
  const auto t = moments_from_table(distribution_dp(4));
  // q_3 / sqrt(m_2) = (-10/69) / sqrt(23/36) = -60 / (69 sqrt(23))
  const double expected = -60.0 / (69.0 * std::sqrt(23.0));
  EXPECT_NEAR(t.alpha_odd(1).to_double(), expected, 1e-15);
}

TEST(ClosedForms, Mean) {
  EXPECT_EQ(mean_formula(4), q(17, 6));
  EXPECT_EQ(mean_formula(2), q(3, 2));
  EXPECT_EQ(mean_formula(1), q(5, 6));
  EXPECT_NE(mean_formula(1), moments_from_table(distribution_dp(1)).mean);
  EXPECT_EQ(moments_from_table(distribution_dp(2)).mean, mean_formula(2));
}

TEST(ClosedForms, Variance) {
  EXPECT_EQ(variance_formula(4), q(23, 36));
  EXPECT_EQ(variance_formula(3), q(83, 180));
  EXPECT_NE(variance_formula(3), moments_from_table(distribution_dp(3)).m(2));
  EXPECT_EQ(variance_formula(100), q(3187, 180));
}

TEST(ClosedForms, GaussianMoments) {
  EXPECT_EQ(gaussian_moment(0), 1);
  EXPECT_EQ(gaussian_moment(2), 3);
  EXPECT_EQ(gaussian_moment(5), 945);
  for (int r = 1; r <= 20; ++r) {
    EXPECT_EQ(gaussian_moment(r), (2 * r - 1) * gaussian_moment(r - 1));
    // (2r)! / (2^r r!)
    BigInt two_r = 1;
    for (int i = 0; i < r; ++i) two_r *= 2;
    Rational expected(factorial(2 * r), two_r * factorial(r));
    expected.canonicalize();
    EXPECT_EQ(gaussian_moment(r), expected);
  }
  EXPECT_THROW(gaussian_moment(-1), InvalidArgument);
}

TEST(ClosedForms, EvenCorrection) {
  EXPECT_EQ(even_correction(0), 0);
  EXPECT_EQ(even_correction(1), 0);
  EXPECT_EQ(even_correction(2), q(-11, 14));
  EXPECT_EQ(even_correction(3), q(-683, 294));
}

TEST(ClosedForms, OddCoefficients) {
  const auto r1 = odd_coefficients(1);
  EXPECT_EQ(r1.leading_over_sqrt10, 0);
  EXPECT_EQ(r1.inner_correction, 0);
  EXPECT_TRUE(r1.leading().is_zero());

  const auto r2 = odd_coefficients(2);
  EXPECT_EQ(r2.leading_over_sqrt10, q(-3, 43));
  EXPECT_EQ(r2.inner_correction, q(1498959, 931392));
  EXPECT_NEAR(r2.leading().to_double(), -3.0 * std::sqrt(10.0) / 43.0, 1e-15);
  EXPECT_NEAR(r2.leading().to_double(), -0.22062402, 1e-8);
  EXPECT_EQ(r2.next_over_sqrt10(), q(-3, 43) * q(1498959, 931392));
}

TEST(PredictAlpha, EvenAndOdd) {
  EXPECT_EQ(predict_alpha(100, 2, Parity::kEven, Truncation::kLeading).to_rational(), 3);
  const Rational first = Rational(3) * (1 - q(11, 1400));
  EXPECT_NEAR(predict_alpha(100, 2, Parity::kEven).to_double(), first.get_d(), 1e-15);
  EXPECT_LT(abs(predict_alpha(100, 2, Parity::kEven) - BigFloat(first, 64)),
            BigFloat::parse("1e-60", 64));
  for (int n : {10, 100, 1000}) {
    EXPECT_TRUE(predict_alpha(n, 1, Parity::kOdd, Truncation::kLeading).is_zero());
    EXPECT_TRUE(predict_alpha(n, 1, Parity::kOdd).is_zero());
  }
  const double lead = -3.0 * std::sqrt(10.0) / 43.0;
  EXPECT_NEAR(predict_alpha(400, 2, Parity::kOdd, Truncation::kLeading).to_double(), lead / 20.0, 1e-15);
  EXPECT_NEAR(predict_alpha(400, 2, Parity::kOdd).to_double(),
              lead / 20.0 * (1.0 + 1498959.0 / 931392.0 / 400.0), 1e-15);
  EXPECT_THROW(predict_alpha(10, 0, Parity::kOdd), InvalidArgument);
  EXPECT_THROW(predict_alpha(10, 0, Parity::kEven), InvalidArgument);
  EXPECT_THROW(predict_alpha(0, 2, Parity::kEven), InvalidArgument);
}

}  // namespace
}  // namespace altseq
