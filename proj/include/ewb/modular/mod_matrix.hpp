#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ewb {

/// A point of (Z/N)^2 written (t1, t2); t2 is the coordinate fed to the
/// Bernoulli polynomial by the horospherical map.
struct TorsionPoint {
  int t1 = 0;
  int t2 = 0;

  bool is_zero() const { return t1 == 0 && t2 == 0; }
  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;
};

/// Element of GL_2(Z/N), N >= 3, acting on column vectors.
class ModMatrix {
 public:
  /// Reduces entries mod N; throws std::invalid_argument if N < 3 or the
  /// determinant is not a unit mod N.
  static ModMatrix make(int N, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static ModMatrix identity(int N) { return make(N, 1, 0, 0, 1); }

  int modulus() const { return n_; }
  int a() const { return e_[0]; }
  int b() const { return e_[1]; }
  int c() const { return e_[2]; }
  int d() const { return e_[3]; }
  const std::array<int, 4>& entries() const { return e_; }
  int det() const;

  ModMatrix inverse() const;
  ModMatrix operator-() const;
  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);

  /// True for (* *; 0 1).
  bool in_parabolic() const { return e_[2] == 0 && e_[3] == 1; }

  std::string to_string() const;

  /// Lexicographic on (a, b, c, d); only meaningful at equal modulus.
  friend auto operator<=>(const ModMatrix&, const ModMatrix&) = default;

 private:
  ModMatrix(int n, std::array<int, 4> e) : n_(n), e_(e) {}
  int n_;
  std::array<int, 4> e_;
};

/// (gt)_1 = a t1 + b t2, (gt)_2 = c t1 + d t2 (mod N). Throws
/// std::invalid_argument if t is not a vector of residues mod g.modulus().
TorsionPoint act(const ModMatrix& g, const TorsionPoint& t);

/// Immutable per-modulus tables: GL_2(Z/N), P(Z/N), and the left cosets Pg.
struct CosetTable {
  int N;
  std::vector<ModMatrix> group;       ///< lexicographic order
  std::vector<ModMatrix> parabolic;   ///< P(Z/N), lexicographic order
  std::vector<ModMatrix> representatives;  ///< one per coset, lexicographic order
  std::vector<int> negation_partner;  ///< index of the coset of -id·g

  /// Index of the coset Pg in `representatives`.
  int index_of(const ModMatrix& g) const;
  /// Number of {±1}-orbits on cosets, i.e. dim Q[Isom]^(k) for either parity.
  int parity_space_dimension() const { return static_cast<int>(representatives.size()) / 2; }

  std::vector<int> bottom_row_index;  ///< N*c + d -> coset index, -1 if not primitive
};

/// Built once per N and shared read-only; throws std::invalid_argument for N < 3.
const CosetTable& coset_table(int N);

/// Smallest element of Pg in lexicographic order, by enumeration of P.
ModMatrix canonical_representative(const ModMatrix& g);

/// Ordered coset representatives of P(Z/N)\GL_2(Z/N).
const std::vector<ModMatrix>& coset_representatives(int N);

}  // namespace ewb
