#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altseq/bigfloat.hpp"
#include "altseq/moments.hpp"

namespace altseq {

// Power of n multiplying the fitted series.
enum class PrefactorExponent { kNone, kInverseSqrt };

struct Sample {
  int n;
  BigFloat value;
};

// Windows hold J+1 samples taken `spacing` apart in the (n-sorted) sample
// list and slide by one sample at a time. spacing = 1 is consecutive points.
struct WindowPolicy {
  int spacing = 1;
};

struct WindowEstimate {
  std::vector<int> ns;
  std::vector<BigFloat> coefficients;
  // |c_j(this) - c_j(previous)| / |c_j(this)|; empty for the first window.
  std::vector<BigFloat> relative_delta;
};

// f(n) ~ n^p * sum_j c_j n^{-j}, j = 0..J, with p from `prefactor`.
struct AsymptoticSeries {
  PrefactorExponent prefactor = PrefactorExponent::kNone;
  int digits = kDefaultDigits;
  std::vector<BigFloat> coefficients;  // from the largest-n window
  std::vector<WindowEstimate> windows;  // ordered by increasing n
  // max |series(n) - sample(n)| over every sample, in the unscaled variable.
  BigFloat max_residual;

  int terms() const { return static_cast<int>(coefficients.size()) - 1; }
  // Absolute change of c_j between the last two windows.
  BigFloat drift(int j) const;
  // True when the relative deltas of c_j never grow as windows move right.
  bool drift_shrinking(int j) const;
  // sum_j c_j n^{-j}
  BigFloat evaluate(int n) const;
};

// Solves the (J+1)x(J+1) system in 1/n for every window. Samples may come
// in any order and are sorted by n. Throws SingularSystem on a duplicate n
// and InvalidArgument when fewer than two windows fit.
AsymptoticSeries fit_inverse_powers(std::span<const Sample> samples, int terms,
                                    WindowPolicy policy = {}, int digits = kDefaultDigits);

// Exact inputs for one odd standardized moment alpha_{2r+1} = q / sqrt(m_2).
struct OddSample {
  int n;
  Rational q;
  Rational m2;
};

// Fits y(n) = alpha_{2r+1} sqrt(n) = q sqrt(n / m_2).
AsymptoticSeries fit_odd_scaled(std::span<const OddSample> samples, int terms,
                                WindowPolicy policy = {}, int digits = kDefaultDigits);

struct RationalPolynomial {
  std::vector<Rational> coefficients;  // ascending powers of r

  int degree() const;
  Rational operator()(const Rational& r) const;
};

// Exact Lagrange interpolation. Needs at least degree+1 distinct r; extra
// points must lie on the interpolant, otherwise InvalidArgument.
RationalPolynomial interpolate_in_r(std::span<const std::pair<int, Rational>> values, int degree);

struct Comparison {
  std::string quantity;
  BigFloat expected;
  BigFloat fitted;
  BigFloat abs_error;
  BigFloat rel_error;
};

struct FitOptions {
  int terms = 3;
  int digits = kDefaultDigits;
  WindowPolicy window;
};

struct FitReport {
  std::string target;  // "alpha_4", "alpha_5*sqrt(n)", ...
  int order = 0;       // standardized moment order
  int n_first = 0;
  int n_last = 0;
  AsymptoticSeries series;
  std::vector<Comparison> comparisons;

  const Comparison& comparison(const std::string& quantity) const;
};

struct EvenSample {
  int n;
  Rational alpha;
};

// alpha_{2r} against g_r and the printed 1/n correction (compared as c_1/c_0).
FitReport fit_even_moment(std::span<const EvenSample> samples, int r, const FitOptions& options = {});
// alpha_{2r+1} sqrt(n) against the printed leading and 1/n coefficients.
FitReport fit_odd_moment(std::span<const OddSample> samples, int r, const FitOptions& options = {});

std::vector<EvenSample> even_samples(std::span<const MomentTable> tables, int r);
std::vector<OddSample> odd_samples(std::span<const MomentTable> tables, int r);

}  // namespace altseq
