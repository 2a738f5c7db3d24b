#include "ewb/exact/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ewb {

PowerSeries::PowerSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order) : PowerSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coefficients[i]);
}

PowerSeries PowerSeries::exponential(const Rational& c, int order) {
  PowerSeries s(order);
  Rational term(1);
  for (int i = 0; i <= order; ++i) {
    s[i] = term;
    term = term * c / Rational(i + 1);
  }
  return s;
}

PowerSeries PowerSeries::variable(int order) {
  PowerSeries s(order);
  if (order >= 1) s[1] = Rational(1);
  return s;
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s[0] = c;
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("PowerSeries: cannot extend truncation order");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PowerSeries PowerSeries::derivative() const {
  if (order_ == 0) throw std::invalid_argument("PowerSeries: derivative of an order-0 series carries no information");
  PowerSeries d(order_ - 1);
  for (int i = 1; i <= order_; ++i) d[i - 1] = coeffs_[static_cast<std::size_t>(i)] * Rational(i);
  return d;
}

PowerSeries PowerSeries::shift_down(int k) const {
  if (k > order_) throw std::invalid_argument("PowerSeries: shift exceeds order");
  for (int i = 0; i < k; ++i)
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
      throw std::domain_error("PowerSeries: shift_down of a series not divisible by z^k");
  PowerSeries s(order_ - k);
  for (int i = k; i <= order_; ++i) s[i - k] = coeffs_[static_cast<std::size_t>(i)];
  return s;
}

PowerSeries PowerSeries::inverse() const {
  const Rational& c0 = coeffs_[0];
  if (c0.is_zero()) throw std::domain_error("PowerSeries: inverse needs a nonzero constant term");
  const Rational inv0 = c0.inverse();
  PowerSeries r(order_);
  r[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc(0);
    for (int i = 1; i <= n; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * r[n - i];
    r[n] = -acc * inv0;
  }
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  if (!g[0].is_zero()) throw std::domain_error("PowerSeries: compose needs g(0) = 0");
  const int order = std::min(order_, g.order());
  PowerSeries result(order);
  PowerSeries gp = PowerSeries::constant(Rational(1), order);
  const PowerSeries gt = g.truncated(order);
  for (int i = 0; i <= order; ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) result += gp * coeffs_[static_cast<std::size_t>(i)];
    gp = gp * gt;
  }
  return result;
}

PowerSeries PowerSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("PowerSeries: exp needs a zero constant term");
  // f' = f'·E recursion: n E_n = sum_{i=1}^n i f_i E_{n-i}.
  PowerSeries e(order_);
  e[0] = Rational(1);
  for (int n = 1; n <= order_; ++n) {
    Rational acc(0);
    for (int i = 1; i <= n; ++i) acc += Rational(i) * coeffs_[static_cast<std::size_t>(i)] * e[n - i];
    e[n] = acc / Rational(n);
  }
  return e;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != Rational(1)) throw std::domain_error("PowerSeries: log needs constant term 1");
  if (order_ == 0) return PowerSeries(0);
  const PowerSeries q = derivative() * truncated(order_ - 1).inverse();
  PowerSeries l(order_);
  for (int i = 1; i <= order_; ++i) l[i] = q[i - 1] / Rational(i);
  return l;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace ewb
