#pragma once

#include <vector>

#include "ewb/exact/rational.hpp"

namespace ewb {

/// Truncated formal power series over Q: sum_{i<=order} c_i z^i, exact
/// modulo z^(order+1). Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Rational> coefficients, int order);

  /// e^(c z) truncated at the given order.
  static PowerSeries exponential(const Rational& c, int order);
  /// The series for z.
  static PowerSeries variable(int order);
  static PowerSeries constant(const Rational& c, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  PowerSeries truncated(int order) const;
  /// Exact derivative; one order of information is lost.
  PowerSeries derivative() const;
  /// Divide by z^k; requires the first k coefficients to vanish. Loses k orders.
  PowerSeries shift_down(int k) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;
  /// f(g) for g with zero constant term.
  PowerSeries compose(const PowerSeries& g) const;
  /// exp(f) for f with zero constant term.
  PowerSeries exp() const;
  /// log(f) for f with constant term 1.
  PowerSeries log() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace ewb
