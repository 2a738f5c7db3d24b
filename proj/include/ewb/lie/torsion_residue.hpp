#pragma once

#include <string>

#include "ewb/exact/rational.hpp"
#include "ewb/lie/quotient.hpp"

namespace ewb {

struct ShiftIdentityCheck {
  bool equal;
  PolbarCoordinates lhs;  ///< U + V
  PolbarCoordinates rhs;  ///< bch(((e^U - 1)/ad_U) V, U)
};

/// log exp(U + V) against log(exp(((e^U - 1)/ad_U) V) exp U) in POLBAR.
/// Throws std::invalid_argument unless V lies in the ideal generated by e1.
ShiftIdentityCheck verify_shift_identity(const LieElement& U, const LieElement& V);

/// exp(ad(-(a/N) e2 - (b/N) e1)) applied to log(phi0), in epsilon-based
/// coordinates; the outer transport to the torsion point is stripped from
/// every identity it enters.
struct UTilde {
  LieElement value;
  bool outer_conjugation_stripped = true;
};

/// Requires 0 <= a, b < N and (a, b) != (0, 0).
UTilde u_tilde(int a, int b, int N, int D);

/// Replays the [N+1]-invariance computation: e^{ad(a e2 + b e1)} applied to
/// e^{-(N+1)/N ad(a e2 + b e1)} log(phi0), compared with u_tilde in LOG.
bool u_tilde_invariant(int a, int b, int N, int D);

enum class PolbarIdentity {
  LogPhi0,           ///< log(phi0) = (1 - e^z) e1
  MonodromyE2,       ///< log T(gamma2) = e2 + N z e^z/(e^z - 1) e1
  MonodromyTorsion,  ///< log(gamma1^a T(gamma2) gamma1^{-a}) - N e1 - e2 = sum_j N B_{j+1}(a/N) z^j/j! u_tilde
};

std::string to_string(PolbarIdentity id);

struct PolbarIdentityCheck {
  PolbarIdentity identity;
  int a;
  int N;
  int D;
  bool equal;
  PolbarCoordinates lhs;
  PolbarCoordinates rhs;
};

/// Both sides in POLBAR. Requires D >= 2 and, for MonodromyTorsion, 0 <= a < N;
/// a is ignored otherwise.
PolbarIdentityCheck verify_polbar_identity(PolbarIdentity identity, int a, int N, int D);

struct TorsionResidue {
  int k;
  int a;
  int N;
  int D;
  Rational lie_value;    ///< -(k+1)/(k+2) r_{k+1}, with r read off MonodromyTorsion
  Rational closed_form;  ///< -N/((k+2) k!) B_{k+2}(a/N)
  Rational alternative;  ///< same expression with B_k in place of B_{k+2}
  bool equal;
  bool matches_alternative;
};

/// Requires k >= 0, 0 <= a < N and D >= k + 3.
TorsionResidue residue_at_torsion(int k, int a, int N, int D);

}  // namespace ewb
