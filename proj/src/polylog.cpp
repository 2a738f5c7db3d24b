#include "ewb/numeric/polylog.hpp"

#include <stdexcept>
#include <string>

#include "ewb/exact/bernoulli.hpp"

namespace ewb {

BigComplex hurwitz_zeta(int s, const Rational& x, long precision_bits) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta: s must be >= 2, got " + std::to_string(s));
  if (x <= Rational(0) || x > Rational(1)) throw std::invalid_argument("hurwitz_zeta: x must lie in (0, 1]");
  const long wp = 2 * precision_bits;
  const long M = precision_bits / 2 + 10;
  const BigFloat tol = BigFloat::power_of_two(-wp, 64);
  const BigFloat xf(x, wp);

  BigFloat sum(wp);
  for (long n = 0; n < M; ++n) sum += pow(xf + BigFloat(n, wp), -s);

  const BigFloat a = xf + BigFloat(M, wp);  // M + x
  sum += pow(a, 1 - s) / BigFloat(s - 1, wp);
  sum += pow(a, -s) / BigFloat(2, wp);

  // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
  BigFloat rising(s, wp);  // s(s+1)...(s+2j-2)
  BigFloat apow = pow(a, -s - 1);
  const BigFloat a2inv = pow(a, -2);
  BigFloat remainder(64);
  BigFloat previous(64);
  int j = 1;
  for (;; ++j) {
    if (j > kHurwitzTermCap)
      throw std::runtime_error("hurwitz_zeta: precision " + std::to_string(precision_bits) +
                               " bits unattainable within the term cap");
    const BigFloat coeff(bernoulli_number(2 * j) / factorial(2 * j), wp);
    const BigFloat term = coeff * rising * apow;
    if (j > 1 && abs(term).with_precision(64) > previous)
      throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin terms diverge before reaching " +
                               std::to_string(precision_bits) + " bits");
    previous = abs(term).with_precision(64);
    if (abs(term).with_precision(64) < tol) {
      // The remainder after j-1 correction terms is bounded by the first
      // omitted term for this completely monotone summand; doubled for slack.
      remainder = abs(term).with_precision(64) * BigFloat(2, 64);
      break;
    }
    sum += term;
    rising *= BigFloat(s + 2 * j - 1, wp) * BigFloat(s + 2 * j, wp);
    apow *= a2inv;
  }

  BigComplex out(sum.with_precision(precision_bits), BigFloat(precision_bits));
  // rounding in working precision over roughly M + 2j operations, then the
  // final rounding to the requested precision
  BigFloat rounding = abs(sum).with_precision(64) * BigFloat::power_of_two(-wp + 1, 64) * BigFloat(M + 4 * j + 4, 64);
  out.error = remainder + rounding + abs(sum).with_precision(64) * BigFloat::power_of_two(-precision_bits, 64);
  return out;
}

BigComplex li_at_root_of_unity(int w, long p, long q, long precision_bits) {
  if (w < 2) throw std::invalid_argument("li_at_root_of_unity: weight must be >= 2, got " + std::to_string(w));
  if (q < 1) throw std::invalid_argument("li_at_root_of_unity: q must be >= 1");
  const long wp = precision_bits + 32;
  const BigFloat two_pi = BigFloat::pi(wp) * BigFloat(2, wp);
  BigComplex sum(wp);
  for (long m = 1; m <= q; ++m) {
    const BigComplex z = hurwitz_zeta(w, Rational(m, q), wp);
    const long r = ((p % q) * m % q + q) % q;
    const BigFloat angle = two_pi * BigFloat(Rational(r, q), wp);
    BigComplex root(cos(angle), sin(angle));
    root.error = BigFloat::power_of_two(-wp + 3, 64);
    sum += root * z;
  }
  BigComplex out = sum * Rational(1, q).pow(w);
  BigComplex rounded(out.re.with_precision(precision_bits), out.im.with_precision(precision_bits));
  rounded.error = out.error + out.abs().with_precision(64) * BigFloat::power_of_two(-precision_bits + 1, 64);
  return rounded;
}

BigComplex proj_mod_Rk(int k, const BigComplex& w) {
  BigComplex out(w.precision());
  if (k % 2 != 0)
    out.re = w.re;
  else
    out.im = w.im;
  out.error = w.error;
  return out;
}

}  // namespace ewb
