#include "ewb/lie/sym_tensor.hpp"

#include <stdexcept>

namespace ewb {

SymTensor::SymTensor(int weight) : m_(weight) {
  if (weight < 0) throw std::invalid_argument("SymTensor: weight must be >= 0");
  c_.assign(static_cast<std::size_t>(weight + 1), Rational(0));
}

SymTensor::SymTensor(int weight, std::vector<Rational> coefficients) : m_(weight), c_(std::move(coefficients)) {
  if (weight < 0) throw std::invalid_argument("SymTensor: weight must be >= 0");
  if (c_.size() != static_cast<std::size_t>(weight + 1))
    throw std::invalid_argument("SymTensor: expected " + std::to_string(weight + 1) + " coefficients");
}

SymTensor SymTensor::monomial(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("SymTensor::monomial: negative exponent");
  SymTensor t(i + j);
  t.c_[static_cast<std::size_t>(i)] = c;
  return t;
}

SymTensor SymTensor::times_generator(int generator) const {
  if (generator != 1 && generator != 2) throw std::invalid_argument("generator must be 1 or 2");
  SymTensor out(m_ + 1);
  for (int i = 0; i <= m_; ++i) out.c_[static_cast<std::size_t>(i + (generator == 1 ? 1 : 0))] = c_[static_cast<std::size_t>(i)];
  return out;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (o.m_ != m_) throw std::invalid_argument("SymTensor: weight mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string SymTensor::to_string() const {
  std::string s;
  for (int i = m_; i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*e1^" + std::to_string(i) + "e2^" + std::to_string(m_ - i);
  }
  return s.empty() ? "0" : s;
}

SymTensor pr_project(int dual_index, const SymTensor& x) {
  if (dual_index != 1 && dual_index != 2) throw std::invalid_argument("pr: dual index must be 1 or 2");
  const int m = x.weight();
  if (m < 1) throw std::invalid_argument("pr: weight must be >= 1");
  SymTensor out(m - 1);
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  for (int i = 0; i <= m; ++i) {
    const Rational& xi = x.coefficient(i);
    if (xi.is_zero()) continue;
    // e1^i e2^{m-i} has i factors e1 and m-i factors e2
    if (dual_index == 1 && i > 0) c[static_cast<std::size_t>(i - 1)] += xi * Rational(i, m + 1);
    if (dual_index == 2 && i < m) c[static_cast<std::size_t>(i)] += xi * Rational(m - i, m + 1);
  }
  return SymTensor(m - 1, std::move(c));
}

DualTensor mu_dual(const SymTensor& x) { return {x.times_generator(1), x.times_generator(2)}; }

SymTensor pr_project(const DualTensor& t) { return pr_project(1, t.first) + pr_project(2, t.second); }

}  // namespace ewb
