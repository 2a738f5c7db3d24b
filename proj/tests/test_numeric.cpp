#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ewb/modular/horospherical.hpp"
#include "ewb/numeric/polylog.hpp"
#include "ewb/numeric/regulator.hpp"
#include "oracle.hpp"

using namespace ewb;
using ewb::oracle::eta;

namespace {

constexpr long kBits = 200;

BigFloat digits_tolerance(int digits) { return BigFloat::parse("1e-" + std::to_string(digits), 64); }

}  // namespace

TEST_CASE("Li_2(-1) against an accelerated alternating series") {
  const auto li = li_at_root_of_unity(2, 1, 2, kBits);
  const BigFloat oracle = -eta(2, kBits + 32);
  CHECK(abs(li.re - oracle) < digits_tolerance(45));
  CHECK(abs(li.im) < digits_tolerance(45));
  CHECK(li.error < digits_tolerance(45));
  const BigFloat pi = BigFloat::pi(kBits);
  CHECK(abs(li.re + pi * pi / BigFloat(12, kBits)) < digits_tolerance(45));
  for (int w : {3, 4, 5}) {
    const auto v = li_at_root_of_unity(w, 1, 2, kBits);
    CHECK(abs(v.re + eta(w, kBits + 32)) < digits_tolerance(45));
  }
}

TEST_CASE("Hurwitz zeta against known values and the duplication formula") {
  const BigFloat pi = BigFloat::pi(kBits);
  const auto half = hurwitz_zeta(2, Rational(1, 2), kBits);
  CHECK(abs(half.re - pi * pi / BigFloat(2, kBits)) < digits_tolerance(45));
  // zeta(s, 1/2) = (2^s - 1) zeta(s) and zeta(s) = eta(s)/(1 - 2^{1-s})
  for (int s : {3, 4, 7}) {
    const BigFloat two_s = BigFloat::power_of_two(s, kBits);
    const BigFloat zeta = eta(s, kBits + 32) / (BigFloat(1, kBits) - BigFloat(2, kBits) / two_s);
    CHECK(abs(hurwitz_zeta(s, Rational(1), kBits).re - zeta) < digits_tolerance(45));
    CHECK(abs(hurwitz_zeta(s, Rational(1, 2), kBits).re - (two_s - BigFloat(1, kBits)) * zeta) < digits_tolerance(45));
  }
  for (const auto& x : {Rational(1, 3), Rational(3, 7), Rational(1)}) {
    const int s = 3;
    const auto lhs = hurwitz_zeta(s, x / Rational(2), kBits) + hurwitz_zeta(s, (x + Rational(1)) / Rational(2), kBits);
    const auto rhs = hurwitz_zeta(s, x, kBits) * Rational(8);
    CHECK(abs(lhs.re - rhs.re) < digits_tolerance(45));
  }
  CHECK_THROWS_AS(hurwitz_zeta(1, Rational(1, 2), kBits), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(0), kBits), std::invalid_argument);
}

TEST_CASE("Li at roots of unity against long double direct summation") {
  constexpr long kTerms = 10'000'000;
  for (const auto& [w, p, q] : {std::tuple{2, 1, 5}, std::tuple{2, 2, 3}, std::tuple{3, 3, 7}}) {
    std::vector<long double> c(static_cast<std::size_t>(q)), s(static_cast<std::size_t>(q));
    for (int m = 0; m < q; ++m) {
      const long double angle = 2.0L * std::numbers::pi_v<long double> * p * m / q;
      c[static_cast<std::size_t>(m)] = std::cos(angle);
      s[static_cast<std::size_t>(m)] = std::sin(angle);
    }
    long double re = 0, im = 0;
    for (long n = kTerms; n >= 1; --n) {
      const long double t = 1.0L / std::pow(static_cast<long double>(n), w);
      re += c[static_cast<std::size_t>(n % q)] * t;
      im += s[static_cast<std::size_t>(n % q)] * t;
    }
    const auto v = li_at_root_of_unity(w, p, q, 128);
    CAPTURE(w);
    CAPTURE(q);
    CHECK(std::fabs(v.re.to_double() - static_cast<double>(re)) < 1e-9);
    CHECK(std::fabs(v.im.to_double() - static_cast<double>(im)) < 1e-9);
  }
}

TEST_CASE("projection modulo R(k)") {
  const BigComplex z(BigFloat(3, 64), BigFloat(5, 64));
  CHECK(proj_mod_Rk(1, z).re == BigFloat(3, 64));
  CHECK(proj_mod_Rk(1, z).im.is_zero());
  CHECK(proj_mod_Rk(2, z).re.is_zero());
  CHECK(proj_mod_Rk(2, z).im == BigFloat(5, 64));
}

TEST_CASE("embeddings are the units") {
  CHECK(embeddings(5).size() == 4);
  CHECK(embeddings(6).size() == 2);
  CHECK_THROWS_AS(EmbeddingIndex(2, 4), std::invalid_argument);
}

TEST_CASE("psi_u regulator relation") {
  for (int N : {3, 5})
    for (int k : {1, 2})
      for (int u = 1; u < N; ++u)
        for (const auto& sigma : embeddings(N)) {
          const auto c = verify_psi_u_regulator(k, u, N, sigma, kBits);
          CHECK(c.difference + c.error_budget < digits_tolerance(35));
        }
}

TEST_CASE("kernel relation residual rejects divisors outside the kernel") {
  const auto d = Divisor::delta(3, {1, 0});
  CHECK_THROWS_AS(kernel_relation_residual(1, d, EmbeddingIndex(1, 3), kBits), std::invalid_argument);
  const auto r = li_combination_residual(1, d, EmbeddingIndex(1, 3), kBits, 1);
  CHECK(r.residual > BigFloat::parse("1e-3", 64));
}

TEST_CASE("error budgets shrink with precision") {
  const auto lo = li_at_root_of_unity(3, 1, 5, 100);
  const auto hi = li_at_root_of_unity(3, 1, 5, 300);
  CHECK(hi.error < lo.error);
  CHECK(abs(lo.re - hi.re) <= lo.error + hi.error);
}
