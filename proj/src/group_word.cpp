#include "ewb/lie/group_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ewb {

GroupWord::GroupWord(const std::vector<int>& letters) {
  for (int l : letters) {
    if (l != 1 && l != -1 && l != 2 && l != -2) throw std::invalid_argument("GroupWord: letter must be ±1 or ±2");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

GroupWord GroupWord::gamma1(int power) { return GroupWord(std::vector<int>(static_cast<std::size_t>(std::abs(power)), power < 0 ? -1 : 1)); }

GroupWord GroupWord::gamma2(int power) { return GroupWord(std::vector<int>(static_cast<std::size_t>(std::abs(power)), power < 0 ? -2 : 2)); }

GroupWord GroupWord::phi0() { return GroupWord({1, 2, -1, -2}); }

GroupWord GroupWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return GroupWord(out);
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<int> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(all);
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

GroupWord monodromy_T(const GroupWord& w, int N) {
  const GroupWord image2 = GroupWord::gamma2() * GroupWord::gamma1(N);
  GroupWord out;
  for (int l : w.letters()) {
    switch (l) {
      case 1: out = out * GroupWord::gamma1(); break;
      case -1: out = out * GroupWord::gamma1(-1); break;
      case 2: out = out * image2; break;
      default: out = out * image2.inverse(); break;
    }
  }
  return out;
}

LieElement log_of_word(const GroupWord& w, int D) {
  const AssocElement e1 = AssocElement::letter(D, 1);
  const AssocElement e2 = AssocElement::letter(D, 2);
  const AssocElement factors[4] = {e1.exp(), (e1 * Rational(-1)).exp(), e2.exp(), (e2 * Rational(-1)).exp()};
  AssocElement product = AssocElement::one(D);
  for (int l : w.letters()) {
    const int slot = (std::abs(l) - 1) * 2 + (l < 0 ? 1 : 0);
    product = product * factors[slot];
  }
  return LieElement::from_assoc(product.log());
}

}  // namespace ewb
