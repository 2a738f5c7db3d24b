#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ewb/exact/bernoulli.hpp"
#include "ewb/modular/horospherical.hpp"

using namespace ewb;

namespace {

int brute_force_group_order(int N) {
  int count = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          if (std::gcd(mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, N), N) == 1) ++count;
  return count;
}

int euler_phi(int N) {
  int count = 0;
  for (int a = 1; a <= N; ++a)
    if (std::gcd(a, N) == 1) ++count;
  return count;
}

Divisor random_divisor(std::mt19937_64& rng, int N) {
  Divisor d(N);
  for (const auto& t : nonzero_points(N))
    if (rng() % 2 == 0) d.set(t, Rational(static_cast<std::int64_t>(rng() % 15) - 7, 1 + static_cast<std::int64_t>(rng() % 5)));
  return d;
}

// Direct evaluation of N^k/(k!(k+2)) sum_t psi(t) B_{k+2}({(g t)_2 / N}).
Rational oracle_value(int k, const Divisor& psi, const ModMatrix& g) {
  const int N = psi.modulus();
  Rational s;
  for (const auto& [t, c] : psi.terms()) {
    const int second = mod(static_cast<std::int64_t>(g.c()) * t.t1 + static_cast<std::int64_t>(g.d()) * t.t2, N);
    s += c * bernoulli_polynomial(k + 2)(Rational(second, N));
  }
  return s * Rational(N).pow(k) / (factorial(k) * Rational(k + 2));
}

}  // namespace

TEST_CASE("coset table sizes against brute force") {
  for (int N = 3; N <= 8; ++N) {
    const auto& t = coset_table(N);
    CAPTURE(N);
    CHECK(static_cast<int>(t.group.size()) == brute_force_group_order(N));
    CHECK(static_cast<int>(t.parabolic.size()) == euler_phi(N) * N);
    CHECK(t.representatives.size() * t.parabolic.size() == t.group.size());
  }
  CHECK(coset_table(3).representatives.size() == 8);
  CHECK(coset_table(4).representatives.size() == 12);
  CHECK(coset_table(3).parity_space_dimension() == 4);
}

TEST_CASE("canonical representative is the minimum of the coset") {
  for (int N : {3, 4, 6}) {
    const auto& t = coset_table(N);
    for (const auto& g : t.group) {
      ModMatrix best = g;
      for (const auto& u : t.parabolic) best = std::min(best, u * g);
      CHECK(canonical_representative(g) == best);
    }
    for (std::size_t i = 0; i < t.representatives.size(); ++i) {
      const ModMatrix neg = canonical_representative(-t.representatives[i]);
      CHECK(t.representatives[static_cast<std::size_t>(t.negation_partner[i])] == neg);
    }
  }
}

TEST_CASE("matrix arithmetic") {
  const auto g = ModMatrix::make(5, 2, 3, 1, 3);
  CHECK(g * g.inverse() == ModMatrix::identity(5));
  CHECK(act(g, {1, 0}) == TorsionPoint{2, 1});
  CHECK_THROWS_AS(ModMatrix::make(4, 2, 0, 0, 2), std::invalid_argument);
}

TEST_CASE("divisor bookkeeping") {
  Divisor d(5);
  d.set({1, 2}, Rational(3, 4));
  d.add({1, 2}, Rational(-3, 4));
  CHECK(d.is_zero());
  CHECK_THROWS_AS(d.set({0, 0}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(d.set({5, 1}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(Divisor(2), std::invalid_argument);

  std::mt19937_64 rng(3);
  const auto psi = random_divisor(rng, 5);
  const auto h1 = ModMatrix::make(5, 1, 2, 3, 2);
  const auto h2 = ModMatrix::make(5, 0, 1, 4, 3);
  CHECK(psi.translated(h1).translated(h2) == psi.translated(h2 * h1));
  CHECK(psi.translated(h1).degree() == psi.degree());
}

TEST_CASE("horospherical map against a direct oracle") {
  std::mt19937_64 rng(11);
  for (int N : {3, 4, 5})
    for (int k = 0; k <= 4; ++k)
      for (int trial = 0; trial < 5; ++trial) {
        const auto psi = random_divisor(rng, N);
        const auto f = horospherical(k, psi);
        for (const auto& g : coset_table(N).group) {
          CHECK(f.at(g) == oracle_value(k, psi, g));
          CHECK(horospherical_value_literal(k, psi, g) == f.at(g));
        }
      }
}

TEST_CASE("horospherical map is equivariant with parity (-1)^k") {
  std::mt19937_64 rng(12);
  for (int N : {3, 4, 5})
    for (int k = 0; k <= 3; ++k) {
      const auto psi = random_divisor(rng, N);
      const auto& t = coset_table(N);
      const Rational sign(k % 2 == 0 ? 1 : -1);
      for (int i = 0; i < 5; ++i) {
        const auto& h = t.group[rng() % t.group.size()];
        for (const auto& g : t.representatives) {
          CHECK(horospherical_value(k, psi.translated(h), g) == horospherical_value(k, psi, g * h));
          CHECK(horospherical_value(k, psi, -g) == sign * horospherical_value(k, psi, g));
        }
      }
    }
}

TEST_CASE("isom functions enforce parity") {
  std::vector<Rational> v(8, Rational(0));
  v[0] = Rational(1);
  CHECK_THROWS_AS(IsomFunction(3, 1, v), std::invalid_argument);
  CHECK(IsomFunction::zero(3, 2).is_zero());
}

TEST_CASE("psi_u is residue-zero and has the expected values") {
  for (int N = 3; N <= 7; ++N)
    for (int k = 1; k <= 4; ++k)
      for (int u = 1; u < N; ++u) {
        const auto psi = psi_u(k, u, N);
        CHECK(is_in_isom_minus_infinity(horospherical(k, psi)));
        const auto hodge = hodge_coefficients(k, psi);
        CHECK(hodge.residue_zero_hypothesis);
        CHECK(hodge.coefficients == std::map<int, Rational>{{u, Rational(1)}});
        const auto dir = dir_l_coefficients(k, psi);
        CHECK(dir.coefficients == std::map<int, Rational>{{u, (Rational(N).pow(k) * factorial(k)).inverse()}});
      }
  CHECK(psi_u(1, 1, 3).coefficient({1, 1}) == Rational(9, 8));
  CHECK(psi_u(2, 2, 3).coefficient({2, 0}) == Rational(-1, 3));
  CHECK_THROWS_AS(psi_u(1, 3, 3), std::invalid_argument);
}

TEST_CASE("combinations flag divisors outside the residue-zero space") {
  const auto d = Divisor::delta(3, {0, 1});
  const auto c = hodge_coefficients(1, d);
  CHECK_FALSE(c.residue_zero_hypothesis);
  CHECK_FALSE(c.warnings.empty());
}

TEST_CASE("kernel bases") {
  for (int N : {3, 4, 5})
    for (int k = 0; k <= 3; ++k) {
      const auto rep = surjectivity_report(k, N);
      const int n = static_cast<int>(nonzero_points(N).size());
      const auto full = kernel_basis(k, N, false);
      const auto deg0 = kernel_basis(k, N, true);
      CHECK(static_cast<int>(full.size()) == n - rep.rank_full);
      for (const auto& psi : full) CHECK(horospherical(k, psi).is_zero());
      for (const auto& psi : deg0) {
        CHECK(horospherical(k, psi).is_zero());
        CHECK(psi.degree().is_zero());
      }
      CHECK(rep.target == coset_table(N).parity_space_dimension());
      CHECK(rep.rank_degree_zero <= rep.rank_full);
      if (k % 2 == 1) CHECK(rep.surjective_degree_zero());
    }
  CHECK(kernel_basis(1, 3, false).size() == 4);
}

TEST_CASE("residue consistency on random divisors") {
  std::mt19937_64 rng(5);
  for (int N : {3, 4})
    for (int k = 0; k <= 3; ++k)
      for (int trial = 0; trial < 4; ++trial) {
        const auto psi = random_divisor(rng, N);
        for (const auto& g : coset_representatives(N)) {
          const auto c = residue_consistency_check(k, psi, g);
          CHECK(c.holds);
          CHECK(c.lhs == c.rhs);
        }
      }
}
