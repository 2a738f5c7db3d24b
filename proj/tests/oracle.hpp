#pragma once

// Reference computations shared by the unit tests and the acceptance runner.
// They avoid the library's own algorithms.

#include <map>
#include <string>

#include "ewb/exact/rational.hpp"
#include "ewb/numeric/bigfloat.hpp"

namespace ewb::oracle {

// Noncommutative polynomials in X, Y as word -> coefficient maps, truncated.
using Poly = std::map<std::string, Rational>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t deg) {
  Poly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b)
      if (u.size() + v.size() <= deg) out[u + v] += x * y;
  return out;
}

inline Poly add(Poly a, const Poly& b, const Rational& s) {
  for (const auto& [w, c] : b) a[w] += s * c;
  return a;
}

inline Poly series_exp(const Poly& x, std::size_t deg) {
  Poly out{{"", Rational(1)}}, term{{"", Rational(1)}};
  for (std::size_t n = 1; n <= deg; ++n) {
    term = mul(term, x, deg);
    out = add(out, term, factorial(static_cast<int>(n)).inverse());
  }
  return out;
}

inline Poly series_log(Poly x, std::size_t deg) {
  x[""] -= Rational(1);
  Poly out, term{{"", Rational(1)}};
  for (std::size_t n = 1; n <= deg; ++n) {
    term = mul(term, x, deg);
    out = add(out, term, Rational(n % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(n)));
  }
  return out;
}

// Cohen-Rodriguez Villegas-Zagier acceleration of eta(s) = sum_{j>=0} (-1)^j/(j+1)^s.
inline BigFloat eta(int s, long bits) {
  const long n = bits / 2 + 10;
  BigFloat d = pow(BigFloat(3, bits) + sqrt(BigFloat(8, bits)), n);
  d = (d + BigFloat(1, bits) / d) / BigFloat(2, bits);
  BigFloat b(-1, bits), c = -d, sum(0, bits);
  for (long j = 0; j < n; ++j) {
    c = b - c;
    sum += c / pow(BigFloat(j + 1, bits), s);
    b = b * BigFloat((j + n) * (j - n), bits) / BigFloat(Rational(2 * j + 1, 2) * Rational(j + 1), bits);
  }
  return sum / d;
}

}  // namespace ewb::oracle
