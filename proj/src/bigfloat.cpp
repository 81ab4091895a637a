#include "altseq/bigfloat.hpp"

#include <algorithm>

#include "altseq/error.hpp"

namespace altseq {

mpfr_prec_t digits_to_bits(int digits) {
  // ceil(digits * log2(10))
  return static_cast<mpfr_prec_t>((static_cast<long>(digits) * 3321929L + 999999L) / 1000000L);
}

BigFloat::BigFloat(int digits) : digits_(digits) {
  if (digits < 1) throw InvalidArgument("BigFloat: precision must be positive");
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int digits) : BigFloat(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, int digits) : BigFloat(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, int digits) : BigFloat(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, int digits) {
  BigFloat x(digits);
  if (text.empty() || mpfr_set_str(x.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw InvalidArgument("not a decimal number: '" + text + "'");
  }
  return x;
}

BigFloat::BigFloat(const BigFloat& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::raise_precision(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, digits_to_bits(digits), MPFR_RNDN);
  digits_ = digits;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

mpq_class BigFloat::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string BigFloat::to_string(int significant) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", std::max(significant, 1), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  raise_precision(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  raise_precision(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  raise_precision(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  raise_precision(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow_int(const BigFloat& x, long exponent) {
  BigFloat r(x);
  mpfr_pow_si(r.get(), x.get(), exponent, MPFR_RNDN);
  return r;
}

BigFloat relative_error(const BigFloat& a, const BigFloat& b) {
  BigFloat diff = abs(a - b);
  if (b.is_zero()) return diff;
  return diff / abs(b);
}

BigFloat to_high_precision(const mpq_class& x, int digits) {
  if (digits < kMinDigits) {
    throw InvalidArgument("to_high_precision: need at least " + std::to_string(kMinDigits) +
                          " digits, got " + std::to_string(digits));
  }
  return BigFloat(x, digits);
}

}  // namespace altseq
