#include "ewb/lie/hall_basis.hpp"

#include <mutex>
#include <stdexcept>

namespace ewb {

namespace {

Word suffix(const Word& w, int start) {
  const int len = w.len - start;
  return Word{len, w.bits & ((len >= 32) ? ~0U : ((1U << len) - 1))};
}

Word prefix(const Word& w, int len) { return Word{len, w.bits >> (w.len - len)}; }

AssocElement commutator(const AssocElement& a, const AssocElement& b) { return a * b - b * a; }

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.len < 1) return false;
  const std::uint32_t mask = (w.len >= 32) ? ~0U : ((1U << w.len) - 1);
  for (int r = 1; r < w.len; ++r) {
    const std::uint32_t rot = ((w.bits << r) | (w.bits >> (w.len - r))) & mask;
    if (rot <= w.bits) return false;
  }
  return true;
}

HallBasis::HallBasis(int D) : d_(D) {
  if (D < 1 || D > kMaxTruncation)
    throw std::invalid_argument("truncation degree must be in [1, " + std::to_string(kMaxTruncation) + "], got " +
                                std::to_string(D));
  for (int len = 1; len <= D; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      const Word w{len, bits};
      if (!is_lyndon(w)) continue;
      HallWord h{w, -1, -1};
      if (len > 1) {
        int split = 1;
        while (!is_lyndon(suffix(w, split))) ++split;
        h.left = index_of(prefix(w, split));
        h.right = index_of(suffix(w, split));
        if (h.left < 0 || h.right < 0) throw std::logic_error("Hall basis: standard factor is not Lyndon");
      }
      index_.emplace(std::make_pair(len, bits), static_cast<int>(words_.size()));
      words_.push_back(h);
    }
  }
  for (const auto& h : words_) {
    if (h.is_generator())
      expansions_.push_back(AssocElement::word(D, h.word));
    else
      expansions_.push_back(commutator(expansion(h.left), expansion(h.right)));
  }
  brackets_.resize(words_.size());
  for (int i = 0; i < size(); ++i) {
    brackets_[static_cast<std::size_t>(i)].resize(words_.size());
    for (int j = i + 1; j < size(); ++j) {
      if (words_[static_cast<std::size_t>(i)].degree() + words_[static_cast<std::size_t>(j)].degree() > D) continue;
      const auto coords = coordinates_of(commutator(expansion(i), expansion(j)));
      auto& out = brackets_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k < size(); ++k)
        if (!coords[static_cast<std::size_t>(k)].is_zero()) out.emplace_back(k, coords[static_cast<std::size_t>(k)]);
    }
  }
}

int HallBasis::index_of(const Word& w) const {
  const auto it = index_.find({w.len, w.bits});
  return it == index_.end() ? -1 : it->second;
}

std::string HallBasis::bracket_string(int i) const {
  const auto& h = (*this)[i];
  if (h.is_generator()) return h.word.bits == 0 ? "e1" : "e2";
  return "[" + bracket_string(h.left) + "," + bracket_string(h.right) + "]";
}

int HallBasis::parse_bracket(const std::string& s) const {
  for (int i = 0; i < size(); ++i)
    if (bracket_string(i) == s) return i;
  throw std::invalid_argument("unknown Hall word '" + s + "' at truncation " + std::to_string(d_));
}

const SparseVector& HallBasis::structure_constants(int i, int j) const {
  if (i >= j) throw std::invalid_argument("HallBasis::structure_constants: requires i < j");
  return brackets_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::vector<Rational> HallBasis::coordinates_of(const AssocElement& x) const {
  if (x.truncation() != d_) throw std::invalid_argument("HallBasis: truncation mismatch");
  if (!x.constant_term().is_zero()) throw std::logic_error("not a Lie polynomial: nonzero constant term");
  std::vector<Rational> coords(words_.size(), Rational(0));
  AssocElement rest = x;
  // The smallest word in the support of a Lie polynomial is Lyndon, and the
  // expansion of a Lyndon basis element is that word plus larger ones.
  for (int len = 1; len <= d_; ++len) {
    const std::size_t base = (std::size_t{1} << len) - 1;
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      const Rational c = rest[base + bits];
      if (c.is_zero()) continue;
      const int idx = index_of(Word{len, bits});
      if (idx < 0) throw std::logic_error("not a Lie polynomial: leading word " + Word{len, bits}.to_string() + " is not Lyndon");
      coords[static_cast<std::size_t>(idx)] = c;
      rest -= expansion(idx) * c;
    }
  }
  return coords;
}

std::shared_ptr<const HallBasis> hall_basis_table(int D) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const HallBasis>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[D];
  if (!slot) slot = std::make_shared<const HallBasis>(D);
  return slot;
}

std::vector<HallWord> hall_basis(int D) { return hall_basis_table(D)->words(); }

}  // namespace ewb
