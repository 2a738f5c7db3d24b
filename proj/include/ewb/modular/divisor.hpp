#pragma once

#include <map>
#include <string>
#include <vector>

#include "ewb/exact/rational.hpp"
#include "ewb/modular/mod_matrix.hpp"

namespace ewb {

/// Finitely supported Q-valued function on (Z/N)^2 \ {0}. Zero coefficients
/// are never stored; (0,0) is rejected.
class Divisor {
 public:
  explicit Divisor(int N);
  static Divisor delta(int N, const TorsionPoint& t, const Rational& c = Rational(1));

  int modulus() const { return n_; }
  const std::map<TorsionPoint, Rational>& terms() const { return terms_; }
  Rational coefficient(const TorsionPoint& t) const;
  /// Overwrites the coefficient at t (removing it when c == 0).
  void set(const TorsionPoint& t, const Rational& c);
  void add(const TorsionPoint& t, const Rational& c);

  /// Sum of all coefficients.
  Rational degree() const;
  bool is_zero() const { return terms_.empty(); }

  /// (h·psi)(t) = psi(h^{-1} t).
  Divisor translated(const ModMatrix& h) const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(const Rational& c);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(Divisor a, const Rational& c) { return a *= c; }
  friend Divisor operator*(const Rational& c, Divisor a) { return a *= c; }
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  void check_point(const TorsionPoint& t) const;
  int n_;
  std::map<TorsionPoint, Rational> terms_;
};

/// (Z/N)^2 \ {0} in lexicographic order of (t1, t2): the column order of every
/// divisor-space matrix.
std::vector<TorsionPoint> nonzero_points(int N);

/// Function on P(Z/N)\GL_2(Z/N) with parity (-1)^k under -id; values are
/// indexed like coset_representatives(N).
class IsomFunction {
 public:
  /// Throws std::invalid_argument if the values violate the parity condition.
  IsomFunction(int N, int k, std::vector<Rational> values);
  static IsomFunction zero(int N, int k);

  int modulus() const { return n_; }
  int parity() const { return parity_; }
  const std::vector<Rational>& values() const { return values_; }
  /// Evaluation at any g; factors through the coset Pg.
  const Rational& at(const ModMatrix& g) const;
  bool is_zero() const;

  friend bool operator==(const IsomFunction&, const IsomFunction&) = default;

 private:
  int n_;
  int parity_;
  std::vector<Rational> values_;
};

/// Formal combination sum_u q_u c^k(zeta^u).
struct CyclotomicCombo {
  int N = 0;
  int k = 0;
  std::map<int, Rational> coefficients;
  bool residue_zero_hypothesis = true;
  std::vector<std::string> warnings;
};

/// Formal combination sum_u q_u Li_{k+1}(zeta^u).
struct LiCombo {
  int N = 0;
  int k = 0;
  std::map<int, Rational> coefficients;
  bool residue_zero_hypothesis = true;
  std::vector<std::string> warnings;
};

}  // namespace ewb
