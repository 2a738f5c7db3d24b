#include "ewb/lie/torsion_residue.hpp"

#include <stdexcept>
#include <string>

#include "ewb/exact/bernoulli.hpp"
#include "ewb/lie/group_word.hpp"
#include "ewb/lie/sym_tensor.hpp"

namespace ewb {

ShiftIdentityCheck verify_shift_identity(const LieElement& U, const LieElement& V) {
  if (!in_ideal_of_e1(V)) throw std::invalid_argument("verify_shift_identity: V must lie in the ideal generated by e1");
  const int D = U.truncation();
  // (e^z - 1)/z = sum z^n/(n+1)!
  PowerSeries f(D);
  for (int n = 0; n <= D; ++n) f[n] = factorial(n + 1).inverse();
  const auto lhs = polbar_coordinates(U + V);
  const auto rhs = polbar_coordinates(bch(ad_series(f, U, V), U));
  return {lhs == rhs, lhs, rhs};
}

namespace {

void check_torsion(int a, int b, int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (a < 0 || a >= N || b < 0 || b >= N) throw std::invalid_argument("a, b must lie in [0, N)");
  if (a == 0 && b == 0) throw std::invalid_argument("(a, b) must not be (0, 0)");
}

LieElement translate_exponent(int a, int b, const Rational& scale, int D) {
  return (LieElement::generator(D, 2) * Rational(a) + LieElement::generator(D, 1) * Rational(b)) * scale;
}

// e^{-(a/N) ad_{e2}} log(phi0). The e1 part of the exponent is left out: ad_{e1}
// acts trivially on POLBAR classes, so every b gives the same POLBAR image and
// this form also covers N = 1, where no (a, b) != (0, 0) exists.
LieElement u_tilde_polbar_lift(int a, int N, int D) {
  return ad_series(PowerSeries::exponential(Rational(1), D), translate_exponent(a, 0, Rational(-1, N), D),
                   log_of_word(GroupWord::phi0(), D));
}

}  // namespace

UTilde u_tilde(int a, int b, int N, int D) {
  check_torsion(a, b, N);
  // The full log(phi0) is used, not just its leading term [e1,e2]; the
  // POLBAR form e^{-(a/N)z}(1 - e^z) e1 needs the higher-degree part.
  const LieElement u0 = log_of_word(GroupWord::phi0(), D);
  return {ad_series(PowerSeries::exponential(Rational(1), D), translate_exponent(a, b, Rational(-1, N), D), u0), true};
}

bool u_tilde_invariant(int a, int b, int N, int D) {
  check_torsion(a, b, N);
  const auto exp_series = PowerSeries::exponential(Rational(1), D);
  const LieElement u0 = log_of_word(GroupWord::phi0(), D);
  const LieElement scaled = ad_series(exp_series, translate_exponent(a, b, Rational(-(N + 1), N), D), u0);
  const LieElement moved = ad_series(exp_series, translate_exponent(a, b, Rational(1), D), scaled);
  return quotient_reduce(moved, QuotientTag::LOG) == quotient_reduce(u_tilde(a, b, N, D).value, QuotientTag::LOG);
}

std::string to_string(PolbarIdentity id) {
  switch (id) {
    case PolbarIdentity::LogPhi0: return "log_phi0";
    case PolbarIdentity::MonodromyE2: return "monodromy_e2";
    case PolbarIdentity::MonodromyTorsion: return "monodromy_torsion";
  }
  throw std::logic_error("unknown identity");
}

PolbarIdentityCheck verify_polbar_identity(PolbarIdentity identity, int a, int N, int D) {
  if (D < 2) throw std::invalid_argument("verify_polbar_identity: D must be >= 2");
  if (N < 1) throw std::invalid_argument("verify_polbar_identity: N must be >= 1");
  const LieElement e1 = LieElement::generator(D, 1);
  const LieElement e2 = LieElement::generator(D, 2);
  PolbarIdentityCheck out{identity, a, N, D, false, {}, {}};
  LieElement lhs = LieElement::zero(D);
  LieElement rhs = LieElement::zero(D);
  switch (identity) {
    case PolbarIdentity::LogPhi0: {
      lhs = log_of_word(GroupWord::phi0(), D);
      rhs = ad_series(PowerSeries::constant(Rational(1), D) - PowerSeries::exponential(Rational(1), D), e2, e1);
      break;
    }
    case PolbarIdentity::MonodromyE2: {
      lhs = log_of_word(monodromy_T(GroupWord::gamma2(), N), D);
      // N z e^z/(e^z - 1) = N (z/(e^z - 1)) e^z
      const auto f = bernoulli_generating_series(D) * PowerSeries::exponential(Rational(1), D) * Rational(N);
      rhs = e2 + ad_series(f, e2, e1);
      break;
    }
    case PolbarIdentity::MonodromyTorsion: {
      if (a < 0 || a >= N) throw std::invalid_argument("verify_polbar_identity: a must lie in [0, N)");
      // T(gamma_{eps,t}) = gamma_{eps,t} gamma1^a; the outer gamma_{eps,t} is stripped.
      const GroupWord w = GroupWord::gamma1(a) * monodromy_T(GroupWord::gamma2(), N) * GroupWord::gamma1(-a);
      lhs = log_of_word(w, D) - e1 * Rational(N) - e2;
      PowerSeries f(D);
      for (int j = 0; j <= D; ++j) f[j] = Rational(N) * bernoulli_polynomial(j + 1)(Rational(a, N)) / factorial(j);
      rhs = ad_series(f, e2, u_tilde_polbar_lift(a, N, D));
      break;
    }
  }
  out.lhs = polbar_coordinates(lhs);
  out.rhs = polbar_coordinates(rhs);
  out.equal = out.lhs == out.rhs;
  return out;
}

TorsionResidue residue_at_torsion(int k, int a, int N, int D) {
  if (k < 0) throw std::invalid_argument("residue_at_torsion: k must be >= 0");
  if (N < 1 || a < 0 || a >= N) throw std::invalid_argument("residue_at_torsion: a must lie in [0, N)");
  if (D < k + 3)
    throw std::invalid_argument("residue_at_torsion: truncation D=" + std::to_string(D) + " too small, need >= " +
                                std::to_string(k + 3));
  const auto check = verify_polbar_identity(PolbarIdentity::MonodromyTorsion, a, N, D);
  if (check.lhs.e2 != Rational(0)) throw std::logic_error("residue_at_torsion: e2 component in the monodromy identity");
  const auto u = polbar_coordinates(u_tilde_polbar_lift(a, N, D));

  // lhs = r(z) u with u = U(z) e1 and U(0) = 0, so r = (lhs/z)/(U/z).
  const PowerSeries lambda(check.lhs.z_e1, D - 1);
  const PowerSeries series_u(u.z_e1, D - 1);
  const PowerSeries r = lambda.shift_down(1) / series_u.shift_down(1);
  const Rational r_next = r[k + 1];

  // pr(e2^dual ⊗ e2^{k+1}) = (k+1)/(k+2) e2^k
  const Rational pr_factor = pr_project(2, SymTensor::monomial(0, k + 1)).coefficient(0);
  TorsionResidue out;
  out.k = k;
  out.a = a;
  out.N = N;
  out.D = D;
  // single sign from the (id - T) cocycle step
  out.lie_value = -(pr_factor * r_next);
  const Rational scale = -Rational(N) / (Rational(k + 2) * factorial(k));
  out.closed_form = scale * bernoulli_polynomial(k + 2)(Rational(a, N));
  out.alternative = scale * bernoulli_polynomial(k)(Rational(a, N));
  out.equal = out.lie_value == out.closed_form;
  out.matches_alternative = out.lie_value == out.alternative;
  return out;
}

}  // namespace ewb
