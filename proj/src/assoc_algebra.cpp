#include "ewb/lie/assoc_algebra.hpp"

#include <bit>
#include <stdexcept>

namespace ewb {

std::string Word::to_string() const {
  std::string s;
  for (int i = 0; i < len; ++i) s += letter(i) == 1 ? '1' : '2';
  return s;
}

bool lex_less(const Word& u, const Word& v) {
  const int n = std::min(u.len, v.len);
  for (int i = 0; i < n; ++i)
    if (u.letter(i) != v.letter(i)) return u.letter(i) < v.letter(i);
  return u.len < v.len;
}

AssocElement::AssocElement(int D) : d_(D) {
  if (D < 1 || D > kMaxTruncation)
    throw std::invalid_argument("truncation degree must be in [1, " + std::to_string(kMaxTruncation) + "], got " +
                                std::to_string(D));
  c_.assign((std::size_t{1} << (D + 1)) - 1, Rational(0));
}

AssocElement AssocElement::one(int D) {
  AssocElement a(D);
  a.c_[0] = Rational(1);
  return a;
}

AssocElement AssocElement::letter(int D, int generator) {
  if (generator != 1 && generator != 2) throw std::invalid_argument("generator must be 1 or 2");
  return word(D, Word{1, static_cast<std::uint32_t>(generator - 1)});
}

AssocElement AssocElement::word(int D, const Word& w, const Rational& c) {
  AssocElement a(D);
  if (w.len <= D) a.c_[index(w)] = c;
  return a;
}

Word AssocElement::word_at(std::size_t index) {
  const auto len = static_cast<int>(std::bit_width(index + 1)) - 1;
  return Word{len, static_cast<std::uint32_t>(index + 1 - (std::size_t{1} << len))};
}

bool AssocElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

void AssocElement::check_same(const AssocElement& o) const {
  if (o.d_ != d_) throw std::invalid_argument("AssocElement: truncation mismatch");
}

AssocElement& AssocElement::operator+=(const AssocElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

AssocElement& AssocElement::operator-=(const AssocElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

AssocElement& AssocElement::operator*=(const Rational& s) {
  for (auto& x : c_)
    if (!x.is_zero()) x *= s;
  return *this;
}

AssocElement operator*(const AssocElement& a, const AssocElement& b) {
  a.check_same(b);
  const int D = a.d_;
  AssocElement out(D);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const Word u = AssocElement::word_at(i);
    for (int lb = 0; lb + u.len <= D; ++lb) {
      const std::size_t base = (std::size_t{1} << lb) - 1;
      const std::size_t count = std::size_t{1} << lb;
      const std::size_t out_base = (std::size_t{1} << (u.len + lb)) - 1 + (static_cast<std::size_t>(u.bits) << lb);
      for (std::size_t bb = 0; bb < count; ++bb) {
        const Rational& y = b.c_[base + bb];
        if (!y.is_zero()) out.c_[out_base + bb] += a.c_[i] * y;
      }
    }
  }
  return out;
}

AssocElement AssocElement::exp() const {
  if (!constant_term().is_zero()) throw std::invalid_argument("AssocElement::exp: constant term must be 0");
  AssocElement sum = one(d_);
  AssocElement power = one(d_);
  for (int n = 1; n <= d_; ++n) {
    power = power * *this;
    power *= Rational(1, n);
    sum += power;
  }
  return sum;
}

AssocElement AssocElement::log() const {
  if (constant_term() != Rational(1)) throw std::invalid_argument("AssocElement::log: constant term must be 1");
  AssocElement x = *this;
  x.c_[0] = Rational(0);
  AssocElement sum(d_);
  AssocElement power = one(d_);
  for (int n = 1; n <= d_; ++n) {
    power = power * x;
    sum += power * Rational(n % 2 == 1 ? 1 : -1, n);
  }
  return sum;
}

}  // namespace ewb
