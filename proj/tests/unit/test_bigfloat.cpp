#include <cmath>

#include <gtest/gtest.h>

#include "altseq/bigfloat.hpp"
#include "altseq/error.hpp"

namespace altseq {
namespace {

TEST(ToHighPrecision, Examples) {
  EXPECT_EQ(to_high_precision(mpq_class(1, 3), 30).to_string(30), "0." + std::string(30, '3'));
  EXPECT_EQ(to_high_precision(mpq_class(17, 6)).to_string(10), "2.833333333");
  EXPECT_EQ(to_high_precision(mpq_class(-10, 69)).to_string(8), "-0.14492754");
  EXPECT_EQ(to_high_precision(mpq_class(-10, 69)).to_string(20), "-0.14492753623188405797");
}

TEST(ToHighPrecision, RejectsLowPrecision) {
  EXPECT_THROW(to_high_precision(mpq_class(1, 3), 29), InvalidArgument);
}

TEST(ToHighPrecision, CorrectlyRounded) {
  // The nearest binary float to 1/3 at the working precision is within
  // half an ulp, i.e. well inside 10^-digits.
  for (int digits : {30, 64, 128}) {
    const auto x = to_high_precision(mpq_class(1, 3), digits);
    const mpq_class err = abs(x.to_rational() - mpq_class(1, 3));
    mpq_class bound(1);
    for (int i = 0; i < digits; ++i) bound /= 10;
    EXPECT_LT(err, bound) << digits;
  }
}

TEST(BigFloat, PrecisionIsPerObject) {
  const BigFloat third64 = BigFloat(1L, 64) / BigFloat(3L, 64);
  const BigFloat third200 = BigFloat(1L, 200) / BigFloat(3L, 200);
  EXPECT_EQ(third200.digits(), 200);
  EXPECT_GT(abs(third64 - third200), BigFloat(0L, 64));
  EXPECT_LT(abs(third64 - third200), BigFloat::parse("1e-64", 64));
  // Mixing takes the larger precision.
  EXPECT_EQ((third64 + third200).digits(), 200);
}

TEST(BigFloat, Arithmetic) {
  const BigFloat two(2L, 64);
  EXPECT_NEAR(sqrt(two).to_double(), std::sqrt(2.0), 1e-16);
  EXPECT_EQ(pow_int(two, 10).to_double(), 1024.0);
  EXPECT_EQ((-two).to_double(), -2.0);
  EXPECT_EQ(abs(-two), two);
  EXPECT_TRUE(BigFloat(64).is_zero());
  EXPECT_EQ(relative_error(BigFloat(3L, 64), BigFloat(2L, 64)).to_double(), 0.5);
  EXPECT_EQ(relative_error(BigFloat(3L, 64), BigFloat(0L, 64)).to_double(), 3.0);
  EXPECT_THROW(BigFloat::parse("abc", 64), InvalidArgument);
  EXPECT_EQ(BigFloat::parse("-0.25", 64).to_rational(), mpq_class(-1, 4));
}

TEST(BigFloat, CopyAndMove) {
  BigFloat a(mpq_class(1, 7), 100);
  BigFloat b = a;
  EXPECT_EQ(a, b);
  BigFloat c = std::move(b);
  EXPECT_EQ(c, a);
  BigFloat d(64);
  d = c;
  EXPECT_EQ(d.digits(), 100);
  EXPECT_EQ(d, a);
}

}  // namespace
}  // namespace altseq
