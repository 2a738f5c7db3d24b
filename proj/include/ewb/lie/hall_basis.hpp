#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ewb/exact/rational.hpp"
#include "ewb/lie/assoc_algebra.hpp"

namespace ewb {

/// Basis element of the free Lie algebra: a Lyndon word with its standard
/// bracketing [left, right] (right = longest proper Lyndon suffix).
struct HallWord {
  Word word;
  int left = -1;   ///< basis index, -1 for a generator
  int right = -1;  ///< basis index, -1 for a generator

  int degree() const { return word.len; }
  bool is_generator() const { return left < 0; }
};

using SparseVector = std::vector<std::pair<int, Rational>>;

/// Lyndon basis of the free Lie algebra on e1, e2 truncated at degree D,
/// ordered by degree and then lexicographically, together with its
/// associative expansions and bracket structure constants.
class HallBasis {
 public:
  explicit HallBasis(int D);

  int truncation() const { return d_; }
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<HallWord>& words() const { return words_; }
  const HallWord& operator[](int i) const { return words_[static_cast<std::size_t>(i)]; }

  /// Index of a Lyndon word, or -1.
  int index_of(const Word& w) const;
  /// Nested bracket notation, e.g. "[e1,[e1,e2]]".
  std::string bracket_string(int i) const;
  /// Inverse of bracket_string; throws std::invalid_argument if unknown.
  int parse_bracket(const std::string& s) const;

  /// Image of basis element i in the free associative algebra.
  const AssocElement& expansion(int i) const { return expansions_[static_cast<std::size_t>(i)]; }

  /// [h_i, h_j] in basis coordinates (empty when the degree exceeds D).
  const SparseVector& structure_constants(int i, int j) const;

  /// Hall coordinates of a Lie polynomial; throws std::logic_error if the
  /// input is not in the image of the free Lie algebra.
  std::vector<Rational> coordinates_of(const AssocElement& x) const;

 private:
  int d_;
  std::vector<HallWord> words_;
  std::map<std::pair<int, std::uint32_t>, int> index_;
  std::vector<AssocElement> expansions_;
  std::vector<std::vector<SparseVector>> brackets_;  // i < j only
};

/// Shared per-D table, built once; safe to call concurrently.
std::shared_ptr<const HallBasis> hall_basis_table(int D);

/// All Hall words of degree <= D in canonical order.
std::vector<HallWord> hall_basis(int D);

/// True iff w is strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& w);

}  // namespace ewb
