#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ewb/exact/rational.hpp"

namespace ewb {

/// Word in the letters e1, e2. Letter i of the word is bit (len-1-i) of
/// `bits`, with e1 = 0 and e2 = 1, so integer order on equal-length words is
/// lexicographic order with e1 < e2.
struct Word {
  int len = 0;
  std::uint32_t bits = 0;

  int letter(int i) const { return static_cast<int>((bits >> (len - 1 - i)) & 1U) + 1; }
  std::string to_string() const;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Lexicographic order with e1 < e2, a proper prefix being smaller.
bool lex_less(const Word& u, const Word& v);

/// Largest truncation degree supported by the dense word indexing.
inline constexpr int kMaxTruncation = 12;

/// Element of the free associative algebra Q<e1, e2> modulo words of length
/// > D, stored densely over all words of length <= D.
class AssocElement {
 public:
  explicit AssocElement(int D);
  static AssocElement one(int D);
  static AssocElement letter(int D, int generator);
  static AssocElement word(int D, const Word& w, const Rational& c = Rational(1));

  static std::size_t index(const Word& w) { return (std::size_t{1} << w.len) - 1 + w.bits; }
  static Word word_at(std::size_t index);

  int truncation() const { return d_; }
  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& coefficient(const Word& w) const { return c_[index(w)]; }
  void add(const Word& w, const Rational& c) { c_[index(w)] += c; }
  const Rational& constant_term() const { return c_[0]; }
  bool is_zero() const;

  AssocElement& operator+=(const AssocElement& o);
  AssocElement& operator-=(const AssocElement& o);
  AssocElement& operator*=(const Rational& s);
  friend AssocElement operator+(AssocElement a, const AssocElement& b) { return a += b; }
  friend AssocElement operator-(AssocElement a, const AssocElement& b) { return a -= b; }
  friend AssocElement operator*(AssocElement a, const Rational& s) { return a *= s; }
  friend AssocElement operator*(const Rational& s, AssocElement a) { return a *= s; }
  friend AssocElement operator*(const AssocElement& a, const AssocElement& b);
  friend bool operator==(const AssocElement&, const AssocElement&) = default;

  /// Requires zero constant term.
  AssocElement exp() const;
  /// Requires constant term 1.
  AssocElement log() const;

 private:
  void check_same(const AssocElement& o) const;
  int d_;
  std::vector<Rational> c_;
};

}  // namespace ewb
