#include "ewb/lie/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ewb {

std::string to_string(QuotientTag tag) {
  switch (tag) {
    case QuotientTag::FULL: return "FULL";
    case QuotientTag::POL: return "POL";
    case QuotientTag::LOG: return "LOG";
    case QuotientTag::POLBAR: return "POLBAR";
  }
  throw std::logic_error("unknown quotient tag");
}

QuotientTag parse_quotient_tag(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto t : {QuotientTag::FULL, QuotientTag::POL, QuotientTag::LOG, QuotientTag::POLBAR})
    if (to_string(t) == up) return t;
  throw std::invalid_argument("unknown quotient '" + name + "' (expected FULL, POL, LOG or POLBAR)");
}

int metabelian_index(int i, int j) {
  const int n = i + j;
  return 2 + n * (n + 1) / 2 + i;
}

namespace {

int model_size(int D) { return 2 + D * (D - 1) / 2; }

// Multiplies the u0-polynomial part of p by (cx x + cy y), dropping degrees
// above D - 2.
void add_shifted(VectorQ& out, const VectorQ& p, const Rational& cx, const Rational& cy, int D) {
  for (int n = 0; n + 1 <= D - 2; ++n)
    for (int i = 0; i <= n; ++i) {
      const Rational& c = p(metabelian_index(i, n - i));
      if (c.is_zero()) continue;
      if (!cx.is_zero()) out(metabelian_index(i + 1, n - i)) += cx * c;
      if (!cy.is_zero()) out(metabelian_index(i, n - i + 1)) += cy * c;
    }
}

// [A, B] = (a1 b2 - a2 b1) u0 + (a1 x + a2 y) Q - (b1 x + b2 y) P.
VectorQ model_bracket(const VectorQ& A, const VectorQ& B, int D) {
  VectorQ out = zero_vector(A.size());
  if (D >= 2) out(metabelian_index(0, 0)) = A(0) * B(1) - A(1) * B(0);
  add_shifted(out, B, A(0), A(1), D);
  add_shifted(out, A, -B(0), -B(1), D);
  return out;
}

struct QuotientTables {
  int D;
  std::vector<VectorQ> images;     // per Hall basis element
  std::vector<LieElement> lifts;   // per model coordinate
};

bool polbar_kills(int index, int D) {
  for (int n = 0; n <= D - 2; ++n)
    for (int i = 1; i <= n; ++i)
      if (metabelian_index(i, n - i) == index) return true;
  return false;
}

std::unique_ptr<QuotientTables> build_tables(int D) {
  auto t = std::make_unique<QuotientTables>(QuotientTables{D, {}, {}});
  const auto basis = hall_basis_table(D);
  const int m = model_size(D);
  for (const auto& h : basis->words()) {
    VectorQ v = zero_vector(m);
    if (h.is_generator())
      v(static_cast<Eigen::Index>(h.word.bits)) = Rational(1);
    else
      v = model_bracket(t->images[static_cast<std::size_t>(h.left)], t->images[static_cast<std::size_t>(h.right)], D);
    t->images.push_back(std::move(v));
  }

  for (int i = 0; i < basis->size(); ++i)
    for (int j = i + 1; j < basis->size(); ++j) {
      if ((*basis)[i].degree() + (*basis)[j].degree() > D) continue;
      VectorQ via_constants = zero_vector(m);
      for (const auto& [k, c] : basis->structure_constants(i, j)) via_constants += t->images[static_cast<std::size_t>(k)] * c;
      if (via_constants != model_bracket(t->images[static_cast<std::size_t>(i)], t->images[static_cast<std::size_t>(j)], D))
        throw std::logic_error("metabelian model: quotient map is not a Lie homomorphism at " + basis->bracket_string(i) +
                               ", " + basis->bracket_string(j));
    }

  // ad_{e1}(LOG) must be an ideal for POLBAR to be a quotient Lie algebra.
  for (int idx = 0; idx < m; ++idx) {
    if (!polbar_kills(idx, D)) continue;
    VectorQ v = zero_vector(m);
    v(idx) = Rational(1);
    for (int g = 0; g < 2; ++g) {
      VectorQ e = zero_vector(m);
      e(g) = Rational(1);
      const VectorQ w = model_bracket(e, v, D);
      for (int r = 0; r < m; ++r)
        if (!w(r).is_zero() && !polbar_kills(r, D))
          throw std::logic_error("POLBAR: killed subspace is not closed under brackets");
    }
  }

  const LieElement e1 = LieElement::generator(D, 1);
  const LieElement e2 = LieElement::generator(D, 2);
  t->lifts.assign(static_cast<std::size_t>(m), LieElement::zero(D));
  t->lifts[0] = e1;
  t->lifts[1] = e2;
  if (D >= 2) {
    LieElement yj = bracket(e1, e2);
    for (int j = 0; j <= D - 2; ++j) {
      LieElement xi = yj;
      for (int i = 0; i + j <= D - 2; ++i) {
        t->lifts[static_cast<std::size_t>(metabelian_index(i, j))] = xi;
        xi = bracket(e1, xi);
      }
      yj = bracket(e2, yj);
    }
  }
  for (int idx = 0; idx < m; ++idx) {
    VectorQ back = zero_vector(m);
    const auto& lift = t->lifts[static_cast<std::size_t>(idx)];
    for (int k = 0; k < basis->size(); ++k)
      if (!lift.coefficient(k).is_zero()) back += t->images[static_cast<std::size_t>(k)] * lift.coefficient(k);
    VectorQ expected = zero_vector(m);
    expected(idx) = Rational(1);
    if (back != expected) throw std::logic_error("metabelian model: lift is not a section of the quotient map");
  }
  return t;
}

const QuotientTables& tables(int D) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuotientTables>> cache;
  std::unique_ptr<QuotientTables> built;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(D); it != cache.end()) return *it->second;
  }
  built = build_tables(D);  // outside the lock: uses the Hall table cache
  std::lock_guard lock(mutex);
  auto& slot = cache[D];
  if (!slot) slot = std::move(built);
  return *slot;
}

}  // namespace

VectorQ metabelian_coordinates(const LieElement& x) {
  const int D = x.truncation();
  const auto& t = tables(D);
  VectorQ out = zero_vector(model_size(D));
  for (int k = 0; k < x.basis().size(); ++k)
    if (!x.coefficient(k).is_zero()) out += t.images[static_cast<std::size_t>(k)] * x.coefficient(k);
  return out;
}

LieElement quotient_reduce(const LieElement& x, QuotientTag tag) {
  if (tag == QuotientTag::FULL) return x;
  const int D = x.truncation();
  const auto& t = tables(D);
  VectorQ m = metabelian_coordinates(x);
  if (tag == QuotientTag::LOG) m(0) = m(1) = Rational(0);
  if (tag == QuotientTag::POLBAR)
    for (int idx = 2; idx < m.size(); ++idx)
      if (polbar_kills(idx, D)) m(idx) = Rational(0);
  LieElement out = LieElement::zero(D);
  for (int idx = 0; idx < m.size(); ++idx)
    if (!m(idx).is_zero()) out += t.lifts[static_cast<std::size_t>(idx)] * m(idx);
  return out;
}

PolbarCoordinates polbar_coordinates(const LieElement& x) {
  const int D = x.truncation();
  const VectorQ m = metabelian_coordinates(x);
  PolbarCoordinates out{m(1), std::vector<Rational>(static_cast<std::size_t>(D), Rational(0))};
  out.z_e1[0] = m(0);
  // y^j u0 = ad_{e2}^j [e1,e2] = -z^{j+1} e1
  for (int j = 0; j + 1 < D; ++j) out.z_e1[static_cast<std::size_t>(j + 1)] = -m(metabelian_index(0, j));
  return out;
}

bool in_ideal_of_e1(const LieElement& x) { return x.coefficient(1).is_zero(); }

}  // namespace ewb
