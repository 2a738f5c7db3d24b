#pragma once

#include <string>
#include <vector>

#include "ewb/exact/rational.hpp"

namespace ewb {

/// Element of Sym^m H in the monomial basis e1^i e2^{m-i}; coefficient i is
/// the coefficient of e1^i e2^{m-i}.
class SymTensor {
 public:
  explicit SymTensor(int weight);
  SymTensor(int weight, std::vector<Rational> coefficients);
  static SymTensor monomial(int i, int j, const Rational& c = Rational(1));

  int weight() const { return m_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& coefficient(int i) const { return c_.at(static_cast<std::size_t>(i)); }

  /// Multiplication by e1 or e2 (weight m -> m+1).
  SymTensor times_generator(int generator) const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator*=(const Rational& s);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator*(SymTensor a, const Rational& s) { return a *= s; }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

  std::string to_string() const;

 private:
  int m_;
  std::vector<Rational> c_;
};

/// pr(e_d^dual ⊗ x) for x of weight m >= 1: 1/(m+1) times the sum over the m
/// ways of deleting one factor paired against e_d^dual.
SymTensor pr_project(int dual_index, const SymTensor& x);

/// Element of H^dual ⊗ Sym^m H written as e1^dual ⊗ first + e2^dual ⊗ second.
struct DualTensor {
  SymTensor first;
  SymTensor second;
};

/// x -> e1^dual ⊗ e1 x + e2^dual ⊗ e2 x.
DualTensor mu_dual(const SymTensor& x);

/// pr applied to both components and summed.
SymTensor pr_project(const DualTensor& t);

}  // namespace ewb
