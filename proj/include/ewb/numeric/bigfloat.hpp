#pragma once

#include <string>

#include <mpfr.h>

#include "ewb/exact/rational.hpp"

namespace ewb {

/// Owning wrapper around an mpfr_t. Results of binary operations carry the
/// larger of the operand precisions; rounding is to nearest.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 64);
  BigFloat(long value, long precision_bits);
  BigFloat(const Rational& value, long precision_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  /// Parses a decimal string; throws std::invalid_argument if malformed.
  static BigFloat parse(const std::string& text, long precision_bits);
  static BigFloat pi(long precision_bits);
  /// 2^e at the given precision.
  static BigFloat power_of_two(long e, long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  /// Same value rounded to a different precision.
  BigFloat with_precision(long precision_bits) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with the given number of significant digits,
  /// e.g. "-1.2345e-02"; reproducible for a fixed value and digit count.
  std::string to_string(int digits) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
/// x^e for integer e.
BigFloat pow(const BigFloat& x, long e);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& x, const BigFloat& y);

/// Decimal digits represented by a mantissa of the given bit length.
int decimal_digits(long precision_bits);

/// Complex number with an absolute error bound on the stored value.
struct BigComplex {
  BigFloat re;
  BigFloat im;
  BigFloat error;  ///< bound on |stored value - true value|

  explicit BigComplex(long precision_bits);
  BigComplex(BigFloat re, BigFloat im);

  long precision() const { return re.precision(); }
  BigFloat abs() const { return hypot(re, im); }
  BigComplex conj() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  /// Exact rational scale; the error bound scales by |c|.
  friend BigComplex operator*(BigComplex a, const Rational& c);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
};

}  // namespace ewb
