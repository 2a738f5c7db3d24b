#include <doctest.h>

#include <random>

#include "ewb/exact/bernoulli.hpp"
#include "ewb/exact/linalg.hpp"
#include "ewb/exact/power_series.hpp"

using namespace ewb;

namespace {

// B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1.
std::vector<Rational> bernoulli_by_recurrence(int n_max) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n <= n_max; ++n) {
    Rational s;
    for (int j = 0; j < n; ++j) s += binomial(n + 1, j) * b[static_cast<std::size_t>(j)];
    b.push_back(-s / Rational(n + 1));
  }
  return b;
}

}  // namespace

TEST_CASE("rational parsing normalizes") {
  CHECK(Rational::parse("2/4").to_string() == "1/2");
  CHECK(Rational::parse("-6/3").to_string() == "-2/1");
  CHECK(Rational::parse("0").to_string() == "0/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(factorial(6) == Rational(720));
  CHECK(binomial(10, 3) == Rational(120));
  CHECK(mod(-7, 3) == 2);
}

TEST_CASE("bernoulli numbers match the defining recurrence") {
  const auto b = bernoulli_by_recurrence(30);
  for (int n = 0; n <= 30; ++n) CHECK(bernoulli_number(n) == b[static_cast<std::size_t>(n)]);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli polynomials from the binomial expansion") {
  const auto b = bernoulli_by_recurrence(14);
  for (int n = 0; n <= 14; ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(n - j)] = binomial(n, j) * b[static_cast<std::size_t>(j)];
    CHECK(bernoulli_polynomial(n) == RationalPolynomial(c));
  }
  CHECK(bernoulli_polynomial(3)(Rational(1, 3)) == Rational(1, 27));
}

TEST_CASE("periodic bernoulli is 1-periodic") {
  for (int k = 0; k <= 6; ++k)
    for (const auto& x : {Rational(1, 5), Rational(-7, 3), Rational(11, 4)})
      CHECK(periodic_bernoulli(k, x) == periodic_bernoulli(k, x + Rational(3)));
}

TEST_CASE("distribution relation on random arguments") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = static_cast<int>(rng() % 10);
    const int m = 1 + static_cast<int>(rng() % 7);
    const auto q = 1 + static_cast<std::int64_t>(rng() % 11);
    const Rational x(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q)), q);
    const auto c = distribution_relation_check(k, m, x);
    CHECK(c.holds);
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("residue generating series identity") {
  for (int N = 1; N <= 6; ++N)
    for (int a = 0; a < N; ++a) {
      const auto [lhs, rhs] = residue_generating_series(a, N, 12);
      CHECK(lhs == rhs);
    }
  CHECK_THROWS_AS(residue_generating_series(3, 3, 5), std::invalid_argument);
}

TEST_CASE("power series exp and log are inverse") {
  PowerSeries f(10);
  f[1] = Rational(2);
  f[2] = Rational(-1, 3);
  f[5] = Rational(7);
  CHECK(f.exp().log() == f);
  const auto g = PowerSeries::exponential(Rational(3), 10);
  CHECK(g.log() == PowerSeries::variable(10) * Rational(3));
  CHECK((g * g.inverse()) == PowerSeries::constant(Rational(1), 10));
  CHECK(bernoulli_generating_series(8)[2] == Rational(1, 12));
}

TEST_CASE("exact rank and nullspace") {
  MatrixQ m = zero_matrix(3, 4);
  m << Rational(1), Rational(2), Rational(3), Rational(4), Rational(2), Rational(4), Rational(6), Rational(8),
      Rational(1, 2), Rational(0), Rational(1), Rational(0);
  CHECK(exact_rank(m) == 2);
  const MatrixQ ns = nullspace(m);
  CHECK(ns.cols() == 2);
  const MatrixQ prod = m * ns;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
}
