#include "ewb/modular/horospherical.hpp"

#include <stdexcept>
#include <string>

#include "ewb/exact/bernoulli.hpp"
#include "ewb/exact/linalg.hpp"

namespace ewb {

namespace {

void check_weight(int k) {
  if (k < 0) throw std::invalid_argument("weight k must be >= 0, got " + std::to_string(k));
}

// B_{k+2}(j/N) for j = 0..N-1.
std::vector<Rational> bernoulli_table(int k, int N) {
  const auto B = bernoulli_polynomial(k + 2);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) out.push_back(B(Rational(j, N)));
  return out;
}

Rational prefactor(int k, int N) { return Rational(N).pow(k) / (factorial(k) * Rational(k + 2)); }

Rational value_from_table(const std::vector<Rational>& table, const Divisor& psi, const ModMatrix& g) {
  Rational s(0);
  for (const auto& [t, c] : psi.terms()) s += c * table[static_cast<std::size_t>(act(g, t).t2)];
  return s;
}

}  // namespace

Rational horospherical_value(int k, const Divisor& psi, const ModMatrix& g) {
  check_weight(k);
  if (g.modulus() != psi.modulus()) throw std::invalid_argument("horospherical_value: modulus mismatch");
  return prefactor(k, psi.modulus()) * value_from_table(bernoulli_table(k, psi.modulus()), psi, g);
}

Rational horospherical_value_literal(int k, const Divisor& psi, const ModMatrix& g) {
  check_weight(k);
  const int N = psi.modulus();
  if (g.modulus() != N) throw std::invalid_argument("horospherical_value_literal: modulus mismatch");
  const auto table = bernoulli_table(k, N);
  const auto ginv = g.inverse();
  Rational s(0);
  for (const auto& t : nonzero_points(N)) {
    const Rational c = psi.coefficient(act(ginv, t));
    if (!c.is_zero()) s += c * table[static_cast<std::size_t>(t.t2)];
  }
  return prefactor(k, N) * s;
}

IsomFunction horospherical(int k, const Divisor& psi) {
  check_weight(k);
  const int N = psi.modulus();
  const auto table = bernoulli_table(k, N);
  const Rational pre = prefactor(k, N);
  std::vector<Rational> values;
  for (const auto& g : coset_representatives(N)) values.push_back(pre * value_from_table(table, psi, g));
  return IsomFunction(N, k, std::move(values));
}

IsomFunction phi_infinity(int k, int N) {
  const auto& table = coset_table(N);
  std::vector<Rational> values(table.representatives.size(), Rational(0));
  const auto id = ModMatrix::identity(N);
  values[static_cast<std::size_t>(table.index_of(id))] = Rational(1);
  values[static_cast<std::size_t>(table.index_of(-id))] = Rational(mod(k, 2) == 0 ? 1 : -1);
  return IsomFunction(N, k, std::move(values));
}

bool is_in_isom_minus_infinity(const IsomFunction& f) {
  const auto id = ModMatrix::identity(f.modulus());
  return f.at(id).is_zero() && f.at(-id).is_zero();
}

Divisor psi_u(int k, int u, int N) {
  if (k < 1) throw std::invalid_argument("psi_u: k must be >= 1, got " + std::to_string(k));
  if (N < 3) throw std::invalid_argument("psi_u: modulus must be >= 3, got " + std::to_string(N));
  const int ur = mod(u, N);
  if (ur == 0) throw std::invalid_argument("psi_u: u must be nonzero mod N");
  const Rational sign(k % 2 == 1 ? 1 : -1);  // (-1)^{k+1}
  const Rational n(N);
  Divisor d(N);
  d.set({ur, 0}, sign / n.pow(k - 1));
  const Rational tail = -sign * n * n / (Rational(1) - n.pow(k + 1));
  for (int v = 1; v < N; ++v) d.set({ur, v}, tail);
  return d;
}

MatrixQ horospherical_matrix(int k, int N) {
  check_weight(k);
  const auto& reps = coset_representatives(N);
  const auto pts = nonzero_points(N);
  const auto table = bernoulli_table(k, N);
  const Rational pre = prefactor(k, N);
  MatrixQ m = zero_matrix(static_cast<Eigen::Index>(reps.size()), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          pre * table[static_cast<std::size_t>(act(reps[i], pts[j]).t2)];
  return m;
}

namespace {

MatrixQ with_degree_row(const MatrixQ& m) {
  MatrixQ out(m.rows() + 1, m.cols());
  out.topRows(m.rows()) = m;
  out.row(m.rows()).setConstant(Rational(1));
  return out;
}

}  // namespace

std::vector<Divisor> kernel_basis(int k, int N, bool restrict_degree_zero) {
  const MatrixQ m = horospherical_matrix(k, N);
  const MatrixQ basis = nullspace(restrict_degree_zero ? with_degree_row(m) : m);
  const auto pts = nonzero_points(N);
  std::vector<Divisor> out;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Divisor d(N);
    for (Eigen::Index r = 0; r < basis.rows(); ++r) d.set(pts[static_cast<std::size_t>(r)], basis(r, c));
    out.push_back(std::move(d));
  }
  return out;
}

SurjectivityReport surjectivity_report(int k, int N) {
  const MatrixQ m = horospherical_matrix(k, N);
  SurjectivityReport r;
  r.N = N;
  r.k = k;
  r.rank_full = static_cast<int>(exact_rank(m));
  // image of the degree-0 hyperplane: its dimension minus the kernel inside it
  const auto n = static_cast<int>(m.cols());
  r.rank_degree_zero = (n - 1) - static_cast<int>(nullspace(with_degree_row(m)).cols());
  r.target = coset_table(N).parity_space_dimension();
  return r;
}

namespace {

template <typename Combo>
Combo assemble(int k, const Divisor& psi, const Rational& scale) {
  if (k < 1) throw std::invalid_argument("weight k must be >= 1, got " + std::to_string(k));
  Combo combo;
  combo.N = psi.modulus();
  combo.k = k;
  for (const auto& [t, c] : psi.terms())
    if (t.t2 == 0) combo.coefficients[t.t1] = scale * c;
  combo.residue_zero_hypothesis = is_in_isom_minus_infinity(horospherical(k, psi));
  if (!combo.residue_zero_hypothesis)
    combo.warnings.push_back("rho^k(psi) does not vanish at the cusp infinity; formula applied outside its hypothesis");
  return combo;
}

}  // namespace

CyclotomicCombo dir_l_coefficients(int k, const Divisor& psi) {
  const Rational sign(k % 2 == 1 ? 1 : -1);
  return assemble<CyclotomicCombo>(k, psi, sign / (factorial(k) * Rational(psi.modulus())));
}

LiCombo hodge_coefficients(int k, const Divisor& psi) {
  const Rational sign(k % 2 == 1 ? 1 : -1);
  return assemble<LiCombo>(k, psi, sign * Rational(psi.modulus()).pow(k - 1));
}

Rational torsion_residue(int k, const ModMatrix& g, const TorsionPoint& t) {
  check_weight(k);
  const int N = g.modulus();
  const Rational x(act(g, t).t2, N);
  return -Rational(N) / (Rational(k + 2) * factorial(k)) * bernoulli_polynomial(k + 2)(x);
}

ConsistencyCheck residue_consistency_check(int k, const Divisor& psi, const ModMatrix& g) {
  if (g.modulus() != psi.modulus()) throw std::invalid_argument("residue_consistency_check: modulus mismatch");
  ConsistencyCheck out{false, horospherical_value_literal(k, psi, g), Rational(0)};
  Rational s(0);
  for (const auto& [t, c] : psi.terms()) s += c * torsion_residue(k, g, t);
  out.rhs = -Rational(psi.modulus()).pow(k - 1) * s;
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace ewb
