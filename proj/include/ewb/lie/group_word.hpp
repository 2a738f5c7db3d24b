#pragma once

#include <string>
#include <vector>

#include "ewb/lie/lie_element.hpp"

namespace ewb {

/// Freely reduced word in gamma1^{±1}, gamma2^{±1}. Letters are stored as
/// ±1, ±2 (the sign is the exponent).
class GroupWord {
 public:
  GroupWord() = default;
  /// Reduces the given letters; throws std::invalid_argument on letters other
  /// than ±1, ±2.
  explicit GroupWord(const std::vector<int>& letters);

  static GroupWord gamma1(int power = 1);
  static GroupWord gamma2(int power = 1);
  /// gamma1 gamma2 gamma1^{-1} gamma2^{-1}.
  static GroupWord phi0();

  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// e.g. "g1 g2 g1^-1 g2^-1"; "1" for the empty word.
  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

/// gamma1 -> gamma1, gamma2 -> gamma2 gamma1^N, extended multiplicatively.
GroupWord monodromy_T(const GroupWord& w, int N);

/// log of the product of exp(±e_i) over the letters; equals the iterated bch.
LieElement log_of_word(const GroupWord& w, int D);

}  // namespace ewb
