#include "altseq/asymfit.hpp"

#include <algorithm>

#include "altseq/error.hpp"

namespace altseq {

namespace {

inline constexpr int kMinFitDigits = 64;

// Gaussian elimination with partial pivoting; a is row-major, size m x m.
std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row) {
      if (abs(a[row][col]) > abs(a[pivot][col])) pivot = row;
    }
    if (a[pivot][col].is_zero()) throw SingularSystem("fit window matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < m; ++row) {
      const BigFloat factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < m; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<BigFloat> x(m, BigFloat(b.front().digits()));
  for (std::size_t i = m; i-- > 0;) {
    BigFloat acc = b[i];
    for (std::size_t j = i + 1; j < m; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace

BigFloat AsymptoticSeries::drift(int j) const {
  const auto& last = windows.back().coefficients;
  const auto& prev = windows[windows.size() - 2].coefficients;
  return abs(last[static_cast<std::size_t>(j)] - prev[static_cast<std::size_t>(j)]);
}

bool AsymptoticSeries::drift_shrinking(int j) const {
  for (std::size_t w = 2; w < windows.size(); ++w) {
    if (windows[w].relative_delta[static_cast<std::size_t>(j)] >
        windows[w - 1].relative_delta[static_cast<std::size_t>(j)]) {
      return false;
    }
  }
  return true;
}

BigFloat AsymptoticSeries::evaluate(int n) const {
  const BigFloat x = BigFloat(1L, digits) / BigFloat(static_cast<long>(n), digits);
  BigFloat acc(digits);
  for (std::size_t j = coefficients.size(); j-- > 0;) acc = acc * x + coefficients[j];
  return acc;
}

AsymptoticSeries fit_inverse_powers(std::span<const Sample> samples, int terms,
                                    WindowPolicy policy, int digits) {
  if (terms < 0) throw InvalidArgument("fit_inverse_powers: number of terms must be >= 0");
  if (policy.spacing < 1) throw InvalidArgument("fit_inverse_powers: window spacing must be >= 1");
  if (digits < kMinFitDigits) {
    throw InvalidArgument("fit_inverse_powers: precision must be >= " +
                          std::to_string(kMinFitDigits) + " digits");
  }
  std::vector<const Sample*> sorted;
  for (const auto& s : samples) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->n < b->n; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i]->n < 1) throw InvalidArgument("fit_inverse_powers: sample n must be >= 1");
    if (i && sorted[i]->n == sorted[i - 1]->n) {
      throw SingularSystem("fit_inverse_powers: duplicate sample n = " +
                           std::to_string(sorted[i]->n));
    }
  }
  const std::size_t width = static_cast<std::size_t>(terms) * static_cast<std::size_t>(policy.spacing);
  if (sorted.size() < width + 2) {
    throw InvalidArgument("fit_inverse_powers: insufficient samples (" +
                          std::to_string(sorted.size()) + ") for two windows of " +
                          std::to_string(terms + 1) + " points");
  }

  AsymptoticSeries series;
  series.digits = digits;
  const std::size_t m = static_cast<std::size_t>(terms) + 1;
  for (std::size_t start = 0; start + width < sorted.size(); ++start) {
    WindowEstimate est;
    std::vector<std::vector<BigFloat>> a(m);
    std::vector<BigFloat> b;
    for (std::size_t i = 0; i < m; ++i) {
      const Sample& s = *sorted[start + i * static_cast<std::size_t>(policy.spacing)];
      est.ns.push_back(s.n);
      const BigFloat x = BigFloat(1L, digits) / BigFloat(static_cast<long>(s.n), digits);
      BigFloat power(1L, digits);
      for (std::size_t j = 0; j < m; ++j) {
        a[i].push_back(power);
        power *= x;
      }
      b.push_back(s.value);
    }
    est.coefficients = solve(std::move(a), std::move(b));
    if (!series.windows.empty()) {
      const auto& prev = series.windows.back().coefficients;
      for (std::size_t j = 0; j < m; ++j) {
        BigFloat delta = abs(est.coefficients[j] - prev[j]);
        if (!est.coefficients[j].is_zero()) delta /= abs(est.coefficients[j]);
        est.relative_delta.push_back(delta);
      }
    }
    series.windows.push_back(std::move(est));
  }
  series.coefficients = series.windows.back().coefficients;

  series.max_residual = BigFloat(digits);
  for (const auto* s : sorted) {
    const BigFloat r = abs(series.evaluate(s->n) - s->value);
    if (r > series.max_residual) series.max_residual = r;
  }
  return series;
}

AsymptoticSeries fit_odd_scaled(std::span<const OddSample> samples, int terms, WindowPolicy policy,
                                int digits) {
  std::vector<Sample> scaled;
  for (const auto& s : samples) {
    if (s.m2 <= 0) throw InvalidArgument("fit_odd_scaled: m_2 must be positive");
    const BigFloat ratio = BigFloat(static_cast<long>(s.n), digits) / BigFloat(s.m2, digits);
    scaled.push_back({s.n, BigFloat(s.q, digits) * sqrt(ratio)});
  }
  AsymptoticSeries series = fit_inverse_powers(scaled, terms, policy, digits);
  series.prefactor = PrefactorExponent::kInverseSqrt;
  return series;
}

int RationalPolynomial::degree() const {
  for (std::size_t j = coefficients.size(); j-- > 0;) {
    if (coefficients[j] != 0) return static_cast<int>(j);
  }
  return 0;
}

Rational RationalPolynomial::operator()(const Rational& r) const {
  Rational acc = 0;
  for (std::size_t j = coefficients.size(); j-- > 0;) acc = acc * r + coefficients[j];
  return acc;
}

RationalPolynomial interpolate_in_r(std::span<const std::pair<int, Rational>> values, int degree) {
  if (degree < 0) throw InvalidArgument("interpolate_in_r: degree must be >= 0");
  std::vector<std::pair<int, Rational>> pts(values.begin(), values.end());
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].first == pts[i - 1].first) {
      throw InvalidArgument("interpolate_in_r: duplicate r = " + std::to_string(pts[i].first));
    }
  }
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  if (pts.size() < m) {
    throw InvalidArgument("interpolate_in_r: need " + std::to_string(m) + " distinct r values, got " +
                          std::to_string(pts.size()));
  }

  // Newton divided differences on the first m points, then expand the
  // Newton form into monomial coefficients.
  std::vector<Rational> dd;
  for (std::size_t i = 0; i < m; ++i) dd.push_back(pts[i].second);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(pts[i].first - pts[i - level].first);
    }
  }
  RationalPolynomial p{std::vector<Rational>(m, Rational(0))};
  for (std::size_t i = m; i-- > 0;) {
    // p = p * (r - r_i) + dd[i]
    const Rational ri = pts[i].first;
    std::vector<Rational> next(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      if (j + 1 < m) next[j + 1] += p.coefficients[j];
      next[j] -= ri * p.coefficients[j];
    }
    next[0] += dd[i];
    p.coefficients = std::move(next);
  }
  for (std::size_t i = m; i < pts.size(); ++i) {
    if (p(Rational(pts[i].first)) != pts[i].second) {
      throw InvalidArgument("interpolate_in_r: value at r = " + std::to_string(pts[i].first) +
                            " does not lie on a degree-" + std::to_string(degree) + " polynomial");
    }
  }
  return p;
}

const Comparison& FitReport::comparison(const std::string& quantity) const {
  for (const auto& c : comparisons) {
    if (c.quantity == quantity) return c;
  }
  throw InvalidArgument("FitReport: no comparison named '" + quantity + "'");
}

namespace {

Comparison compare(std::string quantity, BigFloat expected, BigFloat fitted) {
  BigFloat abs_error = abs(fitted - expected);
  BigFloat rel_error = relative_error(fitted, expected);
  return {std::move(quantity), std::move(expected), std::move(fitted), std::move(abs_error),
          std::move(rel_error)};
}

void set_range(FitReport& report) {
  report.n_first = report.series.windows.front().ns.front();
  report.n_last = report.series.windows.back().ns.back();
}

}  // namespace

FitReport fit_even_moment(std::span<const EvenSample> samples, int r, const FitOptions& options) {
  if (r < 1) throw InvalidArgument("fit_even_moment: r must be >= 1");
  if (options.terms < 1) throw InvalidArgument("fit_even_moment: need at least 2 terms");
  std::vector<Sample> values;
  for (const auto& s : samples) values.push_back({s.n, BigFloat(s.alpha, options.digits)});
  FitReport report;
  report.target = "alpha_" + std::to_string(2 * r);
  report.order = 2 * r;
  report.series = fit_inverse_powers(values, options.terms, options.window, options.digits);
  set_range(report);
  const auto& c = report.series.coefficients;
  report.comparisons.push_back(
      compare("c0", BigFloat(gaussian_moment(r), options.digits), c[0]));
  report.comparisons.push_back(
      compare("c1/c0", BigFloat(even_correction(r), options.digits), c[1] / c[0]));
  return report;
}

FitReport fit_odd_moment(std::span<const OddSample> samples, int r, const FitOptions& options) {
  if (r < 1) throw InvalidArgument("fit_odd_moment: r must be >= 1");
  if (options.terms < 1) throw InvalidArgument("fit_odd_moment: need at least 2 terms");
  FitReport report;
  report.target = "alpha_" + std::to_string(2 * r + 1) + "*sqrt(n)";
  report.order = 2 * r + 1;
  report.series = fit_odd_scaled(samples, options.terms, options.window, options.digits);
  set_range(report);
  const OddCoefficients predicted = odd_coefficients(r);
  const auto& c = report.series.coefficients;
  report.comparisons.push_back(compare("c0", predicted.leading(options.digits), c[0]));
  report.comparisons.push_back(compare("c1", predicted.next(options.digits), c[1]));
  return report;
}

std::vector<EvenSample> even_samples(std::span<const MomentTable> tables, int r) {
  std::vector<EvenSample> out;
  for (const auto& t : tables) {
    if (!t.standardized || static_cast<int>(t.std_even.size()) <= r) {
      throw InvalidArgument("even_samples: alpha_" + std::to_string(2 * r) +
                            " unavailable at n = " + std::to_string(t.n));
    }
    out.push_back({t.n, t.alpha_even(r)});
  }
  return out;
}

std::vector<OddSample> odd_samples(std::span<const MomentTable> tables, int r) {
  std::vector<OddSample> out;
  for (const auto& t : tables) {
    if (!t.standardized || static_cast<int>(t.std_odd_q.size()) <= r) {
      throw InvalidArgument("odd_samples: q_" + std::to_string(2 * r + 1) +
                            " unavailable at n = " + std::to_string(t.n));
    }
    out.push_back({t.n, t.q_odd(r), t.m(2)});
  }
  return out;
}

}  // namespace altseq
