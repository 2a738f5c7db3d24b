#pragma once

#include <utility>

#include "ewb/exact/polynomial.hpp"
#include "ewb/exact/power_series.hpp"
#include "ewb/exact/rational.hpp"

namespace ewb {

/// The series z/(e^z - 1) to the given order, formed by inverting
/// (e^z - 1)/z = sum z^n/(n+1)!. Throws std::logic_error if the cancelled
/// denominator does not start with 1.
PowerSeries bernoulli_generating_series(int order);

/// B_n = B_n(0), with B_1 = -1/2.
Rational bernoulli_number(int n);

/// B_k(x) from t e^{tx}/(e^t - 1) = sum B_k(x) t^k/k!. Cached per degree;
/// safe to call concurrently.
RationalPolynomial bernoulli_polynomial(int k);

/// B_k evaluated at the representative of x mod Z in [0, 1).
Rational periodic_bernoulli(int k, const Rational& x);

struct DistributionCheck {
  bool holds;
  Rational lhs;  ///< sum_{j<m} B_k((x+j)/m)
  Rational rhs;  ///< m^{1-k} B_k(x)
};

/// Requires k >= 0, m >= 1, 0 <= x < 1.
DistributionCheck distribution_relation_check(int k, int m, const Rational& x);

/// Pair (N d/dz [z e^{(a/N)z}/(e^z-1)], sum_j (N/j!) B_{j+1}(a/N) z^j), both
/// truncated at `order`. Requires 0 <= a < N and order >= 0.
std::pair<PowerSeries, PowerSeries> residue_generating_series(int a, int N, int order);

}  // namespace ewb
