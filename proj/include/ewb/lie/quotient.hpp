#pragma once

#include <string>
#include <vector>

#include "ewb/lie/lie_element.hpp"

namespace ewb {

/// FULL = L, POL = L/[L^2,L^2], LOG = L^2/[L^2,L^2], POLBAR = POL/ad_{e1}(LOG).
enum class QuotientTag { FULL, POL, LOG, POLBAR };

std::string to_string(QuotientTag tag);
/// Accepts the names above case-insensitively.
QuotientTag parse_quotient_tag(const std::string& name);

/// Coordinates in the metabelian model of L/[L^2,L^2]: e1, e2 and the
/// monomials x^i y^j u0 (x = ad e1, y = ad e2, u0 = [e1,e2]), i + j <= D-2,
/// ordered by total degree and then by i. The Hall basis is mapped into the
/// model recursively; the map is checked to be a Lie homomorphism once per D.
VectorQ metabelian_coordinates(const LieElement& x);

/// Index of x^i y^j u0 in metabelian coordinates.
int metabelian_index(int i, int j);

/// Canonical representative of the class of x: a combination of e1, e2 and
/// ad_{e1}^i ad_{e2}^j [e1,e2] whose class survives in the quotient.
/// Idempotent; equal classes give equal representatives.
LieElement quotient_reduce(const LieElement& x, QuotientTag tag);

/// Coordinates in the basis e2, z^i e1 (z = ad e2, 0 <= i <= D-1) of POLBAR.
struct PolbarCoordinates {
  Rational e2;
  std::vector<Rational> z_e1;  ///< z_e1[i] is the coefficient of z^i e1
  friend bool operator==(const PolbarCoordinates&, const PolbarCoordinates&) = default;
};

PolbarCoordinates polbar_coordinates(const LieElement& x);

/// The ideal generated by e1 is Q e1 + L^2: membership means no e2 component.
bool in_ideal_of_e1(const LieElement& x);

}  // namespace ewb
