#include "ewb/lie/lie_element.hpp"

#include <stdexcept>

namespace ewb {

LieElement LieElement::zero(int D) {
  auto b = hall_basis_table(D);
  const auto n = static_cast<Eigen::Index>(b->size());
  return LieElement(std::move(b), zero_vector(n));
}

LieElement LieElement::generator(int D, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("generator index must be 1 or 2");
  return basis_element(D, i - 1);
}

LieElement LieElement::basis_element(int D, int index) {
  LieElement x = zero(D);
  if (index < 0 || index >= x.basis_->size()) throw std::invalid_argument("Hall index out of range");
  x.c_(index) = Rational(1);
  return x;
}

LieElement LieElement::from_coordinates(int D, VectorQ coordinates) {
  auto b = hall_basis_table(D);
  if (coordinates.size() != b->size())
    throw std::invalid_argument("LieElement: expected " + std::to_string(b->size()) + " coordinates");
  return LieElement(std::move(b), std::move(coordinates));
}

LieElement LieElement::from_assoc(const AssocElement& x) {
  auto b = hall_basis_table(x.truncation());
  const auto coords = b->coordinates_of(x);
  VectorQ c(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) c(static_cast<Eigen::Index>(i)) = coords[i];
  return LieElement(std::move(b), std::move(c));
}

bool LieElement::is_zero() const {
  for (Eigen::Index i = 0; i < c_.size(); ++i)
    if (!c_(i).is_zero()) return false;
  return true;
}

int LieElement::valuation() const {
  for (Eigen::Index i = 0; i < c_.size(); ++i)
    if (!c_(i).is_zero()) return (*basis_)[static_cast<int>(i)].degree();
  return 0;
}

LieElement LieElement::homogeneous_part(int n) const {
  LieElement out = *this;
  for (Eigen::Index i = 0; i < c_.size(); ++i)
    if ((*basis_)[static_cast<int>(i)].degree() != n) out.c_(i) = Rational(0);
  return out;
}

AssocElement LieElement::to_assoc() const {
  AssocElement out(truncation());
  for (Eigen::Index i = 0; i < c_.size(); ++i)
    if (!c_(i).is_zero()) out += basis_->expansion(static_cast<int>(i)) * c_(i);
  return out;
}

void LieElement::check_same(const LieElement& o) const {
  if (o.truncation() != truncation()) throw std::invalid_argument("LieElement: truncation mismatch");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  c_ += o.c_;
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  c_ -= o.c_;
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  c_ *= s;
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
  return a.truncation() == b.truncation() && a.c_ == b.c_;
}

std::string LieElement::to_string() const {
  std::string s;
  for (Eigen::Index i = 0; i < c_.size(); ++i) {
    if (c_(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_(i).to_string() + "*" + basis_->bracket_string(static_cast<int>(i));
  }
  return s.empty() ? "0" : s;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.truncation() != y.truncation()) throw std::invalid_argument("bracket: truncation mismatch");
  const auto& B = x.basis();
  LieElement out = LieElement::zero(x.truncation());
  VectorQ acc = out.coordinates();
  const int n = B.size();
  for (int i = 0; i < n; ++i) {
    const Rational& xi = x.coefficient(i);
    if (xi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& yj = y.coefficient(j);
      if (yj.is_zero()) continue;
      if (B[i].degree() + B[j].degree() > B.truncation()) continue;
      const Rational w = i < j ? xi * yj : -(xi * yj);
      for (const auto& [k, c] : B.structure_constants(std::min(i, j), std::max(i, j))) acc(k) += w * c;
    }
  }
  return LieElement::from_coordinates(x.truncation(), std::move(acc));
}

LieElement bch(const LieElement& x, const LieElement& y) {
  if (x.truncation() != y.truncation()) throw std::invalid_argument("bch: truncation mismatch");
  return LieElement::from_assoc((x.to_assoc().exp() * y.to_assoc().exp()).log());
}

LieElement ad_series(const PowerSeries& f, const LieElement& x, const LieElement& y) {
  if (x.truncation() != y.truncation()) throw std::invalid_argument("ad_series: truncation mismatch");
  const int D = x.truncation();
  if (f.order() < D)
    throw std::invalid_argument("ad_series: series order " + std::to_string(f.order()) + " below truncation " +
                                std::to_string(D));
  LieElement out = LieElement::zero(D);
  LieElement term = y;
  for (int j = 0; j <= D && !term.is_zero(); ++j) {
    if (!f[j].is_zero()) out += term * f[j];
    term = bracket(x, term);
  }
  return out;
}

}  // namespace ewb
