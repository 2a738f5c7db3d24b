#include "ewb/exact/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ewb {

namespace {

class BernoulliCache {
 public:
  RationalPolynomial polynomial(int k) {
    std::lock_guard lock(mutex_);
    if (k >= static_cast<int>(polys_.size())) extend(k);
    return polys_[static_cast<std::size_t>(k)];
  }

  Rational number(int n) {
    std::lock_guard lock(mutex_);
    if (n >= static_cast<int>(numbers_.size())) extend(n);
    return numbers_[static_cast<std::size_t>(n)];
  }

 private:
  // B_k(x) = k! [t^k] (t/(e^t-1)) e^{tx} = sum_j C(k,j) B_j x^{k-j}.
  void extend(int k) {
    const int order = std::max(k, 2 * static_cast<int>(numbers_.size()) + 8);
    const PowerSeries g = bernoulli_generating_series(order);
    numbers_.clear();
    for (int n = 0; n <= order; ++n) numbers_.push_back(g[n] * factorial(n));
    polys_.clear();
    for (int d = 0; d <= order; ++d) {
      std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
      for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(d - j)] = binomial(d, j) * numbers_[static_cast<std::size_t>(j)];
      polys_.emplace_back(std::move(c));
    }
  }

  std::mutex mutex_;
  std::vector<Rational> numbers_;
  std::vector<RationalPolynomial> polys_;
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

PowerSeries bernoulli_generating_series(int order) {
  PowerSeries denom(order);
  for (int n = 0; n <= order; ++n) denom[n] = factorial(n + 1).inverse();
  if (denom[0] != Rational(1)) throw std::logic_error("bernoulli_generating_series: (e^z-1)/z must start with 1");
  return denom.inverse();
}

Rational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  return cache().number(n);
}

RationalPolynomial bernoulli_polynomial(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_polynomial: negative degree");
  return cache().polynomial(k);
}

Rational periodic_bernoulli(int k, const Rational& x) { return bernoulli_polynomial(k)(x.fractional_part()); }

DistributionCheck distribution_relation_check(int k, int m, const Rational& x) {
  if (k < 0 || m < 1) throw std::invalid_argument("distribution_relation_check: need k >= 0, m >= 1");
  if (x.sign() < 0 || x >= Rational(1)) throw std::invalid_argument("distribution_relation_check: need 0 <= x < 1");
  const RationalPolynomial b = bernoulli_polynomial(k);
  Rational lhs(0);
  for (int j = 0; j < m; ++j) lhs += b((x + Rational(j)) / Rational(m));
  const Rational rhs = Rational(m).pow(1 - k) * b(x);
  return {lhs == rhs, lhs, rhs};
}

std::pair<PowerSeries, PowerSeries> residue_generating_series(int a, int N, int order) {
  if (N < 1 || a < 0 || a >= N) throw std::invalid_argument("residue_generating_series: need 0 <= a < N");
  if (order < 0) throw std::invalid_argument("residue_generating_series: negative order");
  const Rational x(a, N);

  // One extra order is consumed by the derivative.
  const PowerSeries inner = bernoulli_generating_series(order + 1) * PowerSeries::exponential(x, order + 1);
  PowerSeries lhs = inner.derivative() * Rational(N);

  PowerSeries rhs(order);
  for (int j = 0; j <= order; ++j) rhs[j] = Rational(N) / factorial(j) * bernoulli_polynomial(j + 1)(x);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace ewb
