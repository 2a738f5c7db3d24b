#include "ewb/modular/mod_matrix.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "ewb/exact/rational.hpp"

namespace ewb {

namespace {

int inverse_mod(int x, int N) {
  int t = 0, new_t = 1, r = N, new_r = mod(x, N);
  while (new_r != 0) {
    const int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("not a unit mod " + std::to_string(N));
  return mod(t, N);
}

}  // namespace

ModMatrix ModMatrix::make(int N, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (N < 3) throw std::invalid_argument("ModMatrix: modulus must be >= 3, got " + std::to_string(N));
  ModMatrix m(N, {mod(a, N), mod(b, N), mod(c, N), mod(d, N)});
  if (std::gcd(m.det(), N) != 1)
    throw std::invalid_argument("ModMatrix: determinant not a unit mod " + std::to_string(N) + " for " + m.to_string());
  return m;
}

int ModMatrix::det() const { return mod(static_cast<std::int64_t>(e_[0]) * e_[3] - static_cast<std::int64_t>(e_[1]) * e_[2], n_); }

ModMatrix ModMatrix::inverse() const {
  const std::int64_t di = inverse_mod(det(), n_);
  return make(n_, di * e_[3], -di * e_[1], -di * e_[2], di * e_[0]);
}

ModMatrix ModMatrix::operator-() const { return make(n_, -e_[0], -e_[1], -e_[2], -e_[3]); }

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("ModMatrix: modulus mismatch");
  const auto& p = x.e_;
  const auto& q = y.e_;
  return ModMatrix::make(x.n_, static_cast<std::int64_t>(p[0]) * q[0] + static_cast<std::int64_t>(p[1]) * q[2],
                         static_cast<std::int64_t>(p[0]) * q[1] + static_cast<std::int64_t>(p[1]) * q[3],
                         static_cast<std::int64_t>(p[2]) * q[0] + static_cast<std::int64_t>(p[3]) * q[2],
                         static_cast<std::int64_t>(p[2]) * q[1] + static_cast<std::int64_t>(p[3]) * q[3]);
}

std::string ModMatrix::to_string() const {
  return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" + std::to_string(e_[2]) + "," +
         std::to_string(e_[3]) + "]] mod " + std::to_string(n_);
}

TorsionPoint act(const ModMatrix& g, const TorsionPoint& t) {
  const int N = g.modulus();
  if (t.t1 < 0 || t.t1 >= N || t.t2 < 0 || t.t2 >= N)
    throw std::invalid_argument("act: torsion point is not reduced mod " + std::to_string(N));
  return {mod(static_cast<std::int64_t>(g.a()) * t.t1 + static_cast<std::int64_t>(g.b()) * t.t2, N),
          mod(static_cast<std::int64_t>(g.c()) * t.t1 + static_cast<std::int64_t>(g.d()) * t.t2, N)};
}

int CosetTable::index_of(const ModMatrix& g) const {
  if (g.modulus() != N) throw std::invalid_argument("CosetTable: modulus mismatch");
  return bottom_row_index[static_cast<std::size_t>(g.c() * N + g.d())];
}

ModMatrix canonical_representative(const ModMatrix& g) {
  const auto& P = coset_table(g.modulus()).parabolic;
  ModMatrix best = P.front() * g;
  for (const auto& u : P) best = std::min(best, u * g);
  return best;
}

namespace {

std::unique_ptr<CosetTable> build_table(int N) {
  auto t = std::make_unique<CosetTable>();
  t->N = N;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          if (std::gcd(mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, N), N) == 1)
            t->group.push_back(ModMatrix::make(N, a, b, c, d));
  for (const auto& g : t->group)
    if (g.in_parabolic()) t->parabolic.push_back(g);

  // Partition by literal enumeration of Pg; the lexicographic minimum is the
  // canonical representative.
  std::map<ModMatrix, int> rep_of;
  for (const auto& g : t->group) {
    ModMatrix best = t->parabolic.front() * g;
    for (const auto& u : t->parabolic) best = std::min(best, u * g);
    rep_of.emplace(best, 0);
  }
  for (const auto& [rep, _] : rep_of) t->representatives.push_back(rep);

  // Pg is determined by the bottom row of g; cross-check against the partition.
  t->bottom_row_index.assign(static_cast<std::size_t>(N * N), -1);
  for (std::size_t i = 0; i < t->representatives.size(); ++i) {
    const auto& r = t->representatives[i];
    auto& slot = t->bottom_row_index[static_cast<std::size_t>(r.c() * N + r.d())];
    if (slot != -1) throw std::logic_error("coset table: two cosets share a bottom row");
    slot = static_cast<int>(i);
  }
  if (t->representatives.size() * t->parabolic.size() != t->group.size())
    throw std::logic_error("coset table: coset sizes do not multiply to |GL_2|");

  for (const auto& r : t->representatives) t->negation_partner.push_back(t->index_of(-r));
  return t;
}

}  // namespace

const CosetTable& coset_table(int N) {
  if (N < 3) throw std::invalid_argument("coset_table: modulus must be >= 3, got " + std::to_string(N));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CosetTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[N];
  if (!slot) slot = build_table(N);
  return *slot;
}

const std::vector<ModMatrix>& coset_representatives(int N) { return coset_table(N).representatives; }

}  // namespace ewb
