#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace altseq {

inline constexpr int kDefaultDigits = 64;
inline constexpr int kMinDigits = 30;

// Binary precision holding `digits` significant decimal digits.
mpfr_prec_t digits_to_bits(int digits);

// Owning MPFR value with per-object precision. Results of binary
// operations take the larger operand precision; nothing reads a global
// precision setting. All operations round to nearest.
class BigFloat {
 public:
  explicit BigFloat(int digits = kDefaultDigits);
  BigFloat(long value, int digits);
  BigFloat(const mpz_class& value, int digits);
  BigFloat(const mpq_class& value, int digits);
  // Decimal or scientific text, e.g. "-0.25" or "1e-3".
  static BigFloat parse(const std::string& text, int digits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int digits() const { return digits_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const;
  // Exact value of the binary float as a rational.
  mpq_class to_rational() const;
  // `significant` digits, %Rg style.
  std::string to_string(int significant = 20) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  void raise_precision(int digits);

  int digits_;
  mpfr_t value_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat pow_int(const BigFloat& x, long exponent);

// |a - b| / |b|, or |a - b| when b == 0.
BigFloat relative_error(const BigFloat& a, const BigFloat& b);

// Correctly rounded conversion of an exact rational. digits >= kMinDigits.
BigFloat to_high_precision(const mpq_class& x, int digits = kDefaultDigits);

}  // namespace altseq
