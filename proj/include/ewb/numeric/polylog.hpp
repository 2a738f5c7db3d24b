#pragma once

#include "ewb/exact/rational.hpp"
#include "ewb/numeric/bigfloat.hpp"

namespace ewb {

/// Upper bound on Euler-Maclaurin correction terms before giving up.
inline constexpr int kHurwitzTermCap = 4096;

/// zeta(s, x) = sum_{n>=0} (n+x)^{-s} for integer s >= 2 and 0 < x <= 1, by
/// Euler-Maclaurin at twice the requested precision. The error field bounds
/// the truncation remainder plus accumulated rounding. Throws
/// std::invalid_argument on bad arguments and std::runtime_error if the
/// correction terms do not fall below tolerance within kHurwitzTermCap.
BigComplex hurwitz_zeta(int s, const Rational& x, long precision_bits);

/// Li_w(e^{2 pi i p/q}) = q^{-w} sum_{m=1}^{q} e^{2 pi i p m/q} zeta(w, m/q).
/// Requires w >= 2 and q >= 1.
BigComplex li_at_root_of_unity(int w, long p, long q, long precision_bits);

/// (w + (-1)^{k+1} conj(w))/2: Re w for k odd, i Im w for k even. This is
/// the representative of w modulo (2 pi i)^k R.
BigComplex proj_mod_Rk(int k, const BigComplex& w);

}  // namespace ewb
