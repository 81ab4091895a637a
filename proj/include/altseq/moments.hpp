#pragma once

#include <vector>

#include <gmpxx.h>

#include "altseq/bigfloat.hpp"
#include "altseq/distribution.hpp"

namespace altseq {

using Rational = mpq_class;

inline constexpr int kDefaultMaxMoment = 12;

// Exact moments of X_n and of Z_n = (X_n - mean) / sqrt(m_2).
//
// Odd standardized moments are kept as the rational
//   q_{2r+1} = m_{2r+1} / m_2^r,
// so that alpha_{2r+1} = q_{2r+1} / sqrt(m_2). The square root only
// appears in alpha_odd().
struct MomentTable {
  int n = 0;
  int max_order = 0;
  Rational mean;
  std::vector<Rational> central;    // central[r] = m_r, r = 0..max_order
  std::vector<Rational> std_even;   // std_even[r] = alpha_{2r}, 2r <= max_order
  std::vector<Rational> std_odd_q;  // std_odd_q[r] = q_{2r+1}, 2r+1 <= max_order
  // False when m_2 = 0 (n = 1); the standardized vectors are then empty.
  bool standardized = false;

  const Rational& m(int r) const { return central.at(static_cast<std::size_t>(r)); }
  const Rational& alpha_even(int r) const { return std_even.at(static_cast<std::size_t>(r)); }
  const Rational& q_odd(int r) const { return std_odd_q.at(static_cast<std::size_t>(r)); }
  // alpha_{2r+1} = q_{2r+1} / sqrt(m_2) at the requested precision.
  BigFloat alpha_odd(int r, int digits = kDefaultDigits) const;
};

// Throws InvalidArgument when max_order < 2.
MomentTable moments_from_table(const DistributionTable& t, int max_order = kDefaultMaxMoment);

// Closed forms for the mean 2n/3 + 1/6 and the variance 8n/45 - 13/180.
// Both are evaluated for any n >= 1; the variance is only exact for n >= 4
// and the mean only for n >= 2.
Rational mean_formula(int n);
Rational variance_formula(int n);

// (2r)! / (2^r r!) = 1 * 3 * ... * (2r - 1).
Rational gaussian_moment(int r);

// r(r-1)(10r-713)/1764: the 1/n coefficient inside alpha_{2r} = g_r (1 + c/n + ...).
Rational even_correction(int r);

// Printed odd expansion
//   alpha_{2r+1} ~ -(sqrt(10)/43) g_r n^{-1/2} ((r-1) + P(r)(r-1)/(931392 n))
// with P(r) = 1760r^3 - 381744r^2 + 1430752r + 150351. Every irrational
// quantity is a rational multiple of sqrt(10).
struct OddCoefficients {
  Rational prefactor_over_sqrt10;  // -g_r / 43
  Rational leading_over_sqrt10;    // -g_r (r-1) / 43, the limit of alpha * sqrt(n)
  Rational inner_correction;       // (r-1) P(r) / 931392
  // leading * inner_correction / (r-1), i.e. the 1/n coefficient of
  // alpha * sqrt(n), divided by sqrt(10). Zero when r = 1.
  Rational next_over_sqrt10() const { return prefactor_over_sqrt10 * inner_correction; }

  BigFloat leading(int digits = kDefaultDigits) const;
  BigFloat next(int digits = kDefaultDigits) const;
};

OddCoefficients odd_coefficients(int r);

enum class Parity { kEven, kOdd };

enum class Truncation {
  kLeading,      // limit term only
  kFirstOrder,   // through the printed 1/n term
};

// Prediction for alpha_{2r} (kEven, r >= 1) or alpha_{2r+1} (kOdd, r >= 1)
// from the printed expansions.
BigFloat predict_alpha(int n, int r, Parity parity, Truncation order = Truncation::kFirstOrder,
                       int digits = kDefaultDigits);

}  // namespace altseq
