#include "altseq/moments.hpp"

#include "altseq/error.hpp"

namespace altseq {

BigFloat MomentTable::alpha_odd(int r, int digits) const {
  if (!standardized) throw InvalidArgument("alpha_odd: zero variance, Z_n is undefined");
  return BigFloat(q_odd(r), digits) / sqrt(BigFloat(m(2), digits));
}

MomentTable moments_from_table(const DistributionTable& t, int max_order) {
  if (max_order < 2) throw InvalidArgument("moments_from_table: max moment order must be >= 2");
  if (t.n < 1 || static_cast<int>(t.counts.size()) != t.n) {
    throw InvalidArgument("moments_from_table: malformed distribution table");
  }
  const BigInt total = t.total();
  if (total == 0) throw InvalidArgument("moments_from_table: empty distribution table");

  MomentTable out;
  out.n = t.n;
  out.max_order = max_order;

  Rational weighted = 0;
  for (int k = 1; k <= t.n; ++k) weighted += Rational(t.count(k) * k);
  out.mean = weighted / total;
  out.mean.canonicalize();

  out.central.assign(static_cast<std::size_t>(max_order) + 1, Rational(0));
  for (int k = 1; k <= t.n; ++k) {
    if (t.count(k) == 0) continue;
    const Rational d = Rational(k) - out.mean;
    Rational power = t.count(k);
    for (int r = 0; r <= max_order; ++r) {
      out.central[static_cast<std::size_t>(r)] += power;
      power *= d;
    }
  }
  for (auto& m : out.central) {
    m /= total;
    m.canonicalize();
  }

  const Rational& m2 = out.central[2];
  out.standardized = m2 > 0;
  if (!out.standardized) return out;

  Rational m2_power = 1;  // m_2^r
  for (int r = 0; 2 * r <= max_order; ++r) {
    out.std_even.push_back(out.central[static_cast<std::size_t>(2 * r)] / m2_power);
    if (2 * r + 1 <= max_order) {
      out.std_odd_q.push_back(out.central[static_cast<std::size_t>(2 * r + 1)] / m2_power);
    }
    m2_power *= m2;
  }
  return out;
}

Rational mean_formula(int n) {
  if (n < 1) throw InvalidArgument("mean_formula: n must be >= 1");
  Rational m(4 * n + 1, 6);
  m.canonicalize();
  return m;
}

Rational variance_formula(int n) {
  if (n < 1) throw InvalidArgument("variance_formula: n must be >= 1");
  Rational v(32 * n - 13, 180);
  v.canonicalize();
  return v;
}

Rational gaussian_moment(int r) {
  if (r < 0) throw InvalidArgument("gaussian_moment: r must be >= 0");
  BigInt g = 1;
  for (int j = 1; j <= r; ++j) g *= 2 * j - 1;
  return Rational(g);
}

Rational even_correction(int r) {
  if (r < 0) throw InvalidArgument("even_correction: r must be >= 0");
  const BigInt rr = r;
  Rational c(rr * (rr - 1) * (10 * rr - 713), 1764);
  c.canonicalize();
  return c;
}

OddCoefficients odd_coefficients(int r) {
  if (r < 0) throw InvalidArgument("odd_coefficients: r must be >= 0");
  const BigInt rr = r;
  const BigInt poly = 1760 * rr * rr * rr - 381744 * rr * rr + 1430752 * rr + 150351;
  OddCoefficients c;
  c.prefactor_over_sqrt10 = -gaussian_moment(r) / 43;
  c.leading_over_sqrt10 = c.prefactor_over_sqrt10 * Rational(rr - 1);
  c.inner_correction = Rational((rr - 1) * poly, 931392);
  c.inner_correction.canonicalize();
  return c;
}

namespace {

BigFloat sqrt10(int digits) { return sqrt(BigFloat(10L, digits)); }

}  // namespace

BigFloat OddCoefficients::leading(int digits) const {
  return BigFloat(leading_over_sqrt10, digits) * sqrt10(digits);
}

BigFloat OddCoefficients::next(int digits) const {
  return BigFloat(next_over_sqrt10(), digits) * sqrt10(digits);
}

BigFloat predict_alpha(int n, int r, Parity parity, Truncation order, int digits) {
  if (n < 1) throw InvalidArgument("predict_alpha: n must be >= 1");
  if (r < 1) {
    // The printed odd formula gives a nonzero alpha_1 at r = 0, and
    // alpha_0 = 1 is not a moment worth predicting.
    throw InvalidArgument("predict_alpha: r must be >= 1");
  }
  const Rational inv_n(1, n);
  if (parity == Parity::kEven) {
    Rational value = gaussian_moment(r);
    if (order == Truncation::kFirstOrder) value *= 1 + even_correction(r) * inv_n;
    return BigFloat(value, digits);
  }
  const OddCoefficients c = odd_coefficients(r);
  Rational scaled = c.leading_over_sqrt10;
  if (order == Truncation::kFirstOrder) scaled += c.next_over_sqrt10() * inv_n;
  return BigFloat(scaled, digits) * sqrt10(digits) / sqrt(BigFloat(static_cast<long>(n), digits));
}

}  // namespace altseq
