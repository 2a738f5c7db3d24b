#include "ewb/numeric/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ewb {

namespace {

void check_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) throw std::invalid_argument("precision out of range: " + std::to_string(bits));
}

long joint_precision(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

// Rounding slack for one operation producing a value of magnitude |x|.
BigFloat ulp_bound(const BigFloat& x) {
  BigFloat u = abs(x).with_precision(64);
  mpfr_mul_2si(u.get(), u.get(), 1 - x.precision(), MPFR_RNDU);
  return u;
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  check_precision(precision_bits);
  mpfr_init2(v_, precision_bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) : BigFloat(precision_bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_q(v_, value.value().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(const std::string& text, long precision_bits) {
  BigFloat x(precision_bits);
  if (text.empty() || mpfr_set_str(x.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("malformed decimal number '" + text + "'");
  return x;
}

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat x(precision_bits);
  mpfr_const_pi(x.v_, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::power_of_two(long e, long precision_bits) {
  BigFloat x(1, precision_bits);
  mpfr_mul_2si(x.v_, x.v_, e, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::with_precision(long precision_bits) const {
  BigFloat x(precision_bits);
  mpfr_set(x.v_, v_, MPFR_RNDN);
  return x;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_prec_round(v_, joint_precision(*this, o), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_prec_round(v_, joint_precision(*this, o), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_prec_round(v_, joint_precision(*this, o), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.is_zero()) throw std::domain_error("BigFloat: division by zero");
  mpfr_prec_round(v_, joint_precision(*this, o), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator-(BigFloat a) {
  mpfr_neg(a.v_, a.v_, MPFR_RNDN);
  return a;
}

std::string BigFloat::to_string(int digits) const {
  if (digits < 1) throw std::invalid_argument("to_string: digits must be >= 1");
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(joint_precision(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& x, const BigFloat& y) { return x < y ? y : x; }

int decimal_digits(long precision_bits) {
  return static_cast<int>(std::floor(static_cast<double>(precision_bits) * std::log10(2.0)));
}

BigComplex::BigComplex(long precision_bits) : re(precision_bits), im(precision_bits), error(64) {}

BigComplex::BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)), error(64) {}

BigComplex BigComplex::conj() const {
  BigComplex c = *this;
  c.im = -c.im;
  return c;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  error += o.error;
  error += ulp_bound(abs());
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  error += o.error;
  error += ulp_bound(abs());
  return *this;
}

BigComplex operator*(BigComplex a, const Rational& c) {
  const long p = a.precision();
  const BigFloat s(c, p);
  a.re *= s;
  a.im *= s;
  a.error *= abs(s).with_precision(64);
  a.error += ulp_bound(a.abs());
  a.error += ulp_bound(a.abs());
  return a;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex out(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  const BigFloat na = a.abs().with_precision(64);
  const BigFloat nb = b.abs().with_precision(64);
  out.error = na * b.error + nb * a.error + a.error * b.error;
  for (int i = 0; i < 4; ++i) out.error += ulp_bound(out.abs());
  return out;
}

}  // namespace ewb
