#include "ewb/modular/divisor.hpp"

#include <stdexcept>

namespace ewb {

Divisor::Divisor(int N) : n_(N) {
  if (N < 3) throw std::invalid_argument("Divisor: modulus must be >= 3");
}

Divisor Divisor::delta(int N, const TorsionPoint& t, const Rational& c) {
  Divisor d(N);
  d.set(t, c);
  return d;
}

void Divisor::check_point(const TorsionPoint& t) const {
  if (t.t1 < 0 || t.t1 >= n_ || t.t2 < 0 || t.t2 >= n_)
    throw std::invalid_argument("Divisor: point (" + std::to_string(t.t1) + "," + std::to_string(t.t2) +
                                ") not reduced mod " + std::to_string(n_));
  if (t.is_zero()) throw std::invalid_argument("Divisor: support must exclude (0,0)");
}

Rational Divisor::coefficient(const TorsionPoint& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Divisor::set(const TorsionPoint& t, const Rational& c) {
  check_point(t);
  if (c.is_zero())
    terms_.erase(t);
  else
    terms_[t] = c;
}

void Divisor::add(const TorsionPoint& t, const Rational& c) { set(t, coefficient(t) + c); }

Rational Divisor::degree() const {
  Rational s(0);
  for (const auto& [_, c] : terms_) s += c;
  return s;
}

Divisor Divisor::translated(const ModMatrix& h) const {
  if (h.modulus() != n_) throw std::invalid_argument("Divisor::translated: modulus mismatch");
  Divisor out(n_);
  for (const auto& [t, c] : terms_) out.set(act(h, t), c);
  return out;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (o.n_ != n_) throw std::invalid_argument("Divisor: modulus mismatch");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  if (o.n_ != n_) throw std::invalid_argument("Divisor: modulus mismatch");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

Divisor& Divisor::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

std::vector<TorsionPoint> nonzero_points(int N) {
  std::vector<TorsionPoint> pts;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != 0 || b != 0) pts.push_back({a, b});
  return pts;
}

IsomFunction::IsomFunction(int N, int k, std::vector<Rational> values)
    : n_(N), parity_(mod(k, 2)), values_(std::move(values)) {
  const auto& table = coset_table(N);
  if (values_.size() != table.representatives.size())
    throw std::invalid_argument("IsomFunction: expected " + std::to_string(table.representatives.size()) + " values");
  const Rational sign(parity_ == 0 ? 1 : -1);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto partner = static_cast<std::size_t>(table.negation_partner[i]);
    if (values_[partner] != sign * values_[i])
      throw std::invalid_argument("IsomFunction: parity condition f(-g) = (-1)^k f(g) violated at " +
                                  table.representatives[i].to_string());
  }
}

IsomFunction IsomFunction::zero(int N, int k) {
  return IsomFunction(N, k, std::vector<Rational>(coset_table(N).representatives.size(), Rational(0)));
}

const Rational& IsomFunction::at(const ModMatrix& g) const {
  return values_[static_cast<std::size_t>(coset_table(n_).index_of(g))];
}

bool IsomFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace ewb
