#pragma once

#include <memory>
#include <string>

#include "ewb/exact/power_series.hpp"
#include "ewb/exact/rational.hpp"
#include "ewb/lie/assoc_algebra.hpp"
#include "ewb/lie/hall_basis.hpp"

namespace ewb {

/// Element of the free Lie algebra on e1, e2 truncated at degree D, in Hall
/// (Lyndon) coordinates.
class LieElement {
 public:
  static LieElement zero(int D);
  /// e1 or e2.
  static LieElement generator(int D, int i);
  static LieElement basis_element(int D, int index);
  static LieElement from_coordinates(int D, VectorQ coordinates);
  /// Throws std::logic_error if x is not a Lie polynomial.
  static LieElement from_assoc(const AssocElement& x);

  int truncation() const { return basis_->truncation(); }
  const HallBasis& basis() const { return *basis_; }
  const VectorQ& coordinates() const { return c_; }
  const Rational& coefficient(int index) const { return c_(index); }
  Rational coefficient(const std::string& bracket) const { return c_(basis_->parse_bracket(bracket)); }
  bool is_zero() const;
  /// Lowest degree with a nonzero coordinate, or 0 for the zero element.
  int valuation() const;
  /// Part of homogeneous degree n.
  LieElement homogeneous_part(int n) const;

  AssocElement to_assoc() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
  friend LieElement operator*(LieElement a, const Rational& s) { return a *= s; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b);

  /// Sum of coefficient * bracket string, e.g. "1/2*[e1,e2] + e1".
  std::string to_string() const;

 private:
  LieElement(std::shared_ptr<const HallBasis> basis, VectorQ c) : basis_(std::move(basis)), c_(std::move(c)) {}
  void check_same(const LieElement& o) const;
  std::shared_ptr<const HallBasis> basis_;
  VectorQ c_;
};

/// Bilinear bracket through the Hall structure constants; degrees above D
/// are dropped.
LieElement bracket(const LieElement& x, const LieElement& y);

/// log(exp x exp y), computed in the truncated free associative algebra.
LieElement bch(const LieElement& x, const LieElement& y);

/// sum_j f_j ad_x^j (y). Requires f.order() >= D.
LieElement ad_series(const PowerSeries& f, const LieElement& x, const LieElement& y);

}  // namespace ewb
