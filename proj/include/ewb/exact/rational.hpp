#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace ewb {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over mpq_class. It hides the gmpxx expression templates
/// so the type composes cleanly with Eigen containers and std algorithms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer not exceeding the value.
  mpz_class floor() const;
  /// Representative of the class mod Z in [0, 1).
  Rational fractional_part() const;
  Rational abs() const;
  Rational inverse() const;
  Rational pow(int exponent) const;

  double to_double() const { return q_.get_d(); }

  /// Always "p/q" with q > 0, including integers ("3/1").
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

Rational factorial(int n);
Rational binomial(int n, int k);

/// Non-negative residue of n mod m (m > 0).
inline int mod(std::int64_t n, int m) {
  const auto r = static_cast<int>(n % m);
  return r < 0 ? r + m : r;
}

}  // namespace ewb

template <>
struct std::hash<ewb::Rational> {
  std::size_t operator()(const ewb::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

namespace Eigen {

template <>
struct NumTraits<ewb::Rational> : GenericNumTraits<ewb::Rational> {
  using Real = ewb::Rational;
  using NonInteger = ewb::Rational;
  using Nested = ewb::Rational;
  using Literal = ewb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ewb {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Zero-initialized rational vector/matrix (Eigen leaves custom scalars
/// default-constructed, which for Rational is already zero; kept explicit).
inline VectorQ zero_vector(Eigen::Index n) { return VectorQ::Constant(n, Rational(0)); }
inline MatrixQ zero_matrix(Eigen::Index r, Eigen::Index c) { return MatrixQ::Constant(r, c, Rational(0)); }

}  // namespace ewb
