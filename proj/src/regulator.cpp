#include "ewb/numeric/regulator.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "ewb/modular/horospherical.hpp"
#include "ewb/numeric/polylog.hpp"

namespace ewb {

EmbeddingIndex::EmbeddingIndex(int j, int N) : j_(mod(j, N)), n_(N) {
  if (N < 1) throw std::invalid_argument("EmbeddingIndex: N must be >= 1");
  if (std::gcd(j_, N) != 1) throw std::invalid_argument("EmbeddingIndex: " + std::to_string(j) + " is not a unit mod " + std::to_string(N));
}

std::vector<EmbeddingIndex> embeddings(int N) {
  std::vector<EmbeddingIndex> out;
  for (int j = 1; j < N; ++j)
    if (std::gcd(j, N) == 1) out.emplace_back(j, N);
  return out;
}

BigComplex evaluate(const LiCombo& combo, const EmbeddingIndex& sigma, long precision_bits) {
  if (combo.N != sigma.modulus()) throw std::invalid_argument("evaluate: modulus mismatch");
  BigComplex sum(precision_bits);
  for (const auto& [u, q] : combo.coefficients)
    sum += li_at_root_of_unity(combo.k + 1, static_cast<long>(sigma.j()) * u, combo.N, precision_bits) * q;
  return sum;
}

namespace {

LiCombo line_combo(int k, const Divisor& psi) {
  LiCombo c;
  c.N = psi.modulus();
  c.k = k;
  for (const auto& [t, q] : psi.terms())
    if (t.t2 == 0) c.coefficients[t.t1] = q;
  return c;
}

}  // namespace

ResidualReport li_combination_residual(int k, const Divisor& psi, const EmbeddingIndex& sigma, long precision_bits,
                                       int twist) {
  if (k < 1) throw std::invalid_argument("weight k must be >= 1, got " + std::to_string(k));
  BigComplex value = evaluate(line_combo(k, psi), sigma, precision_bits);
  BigComplex projected = proj_mod_Rk(twist, value);
  BigFloat residual = projected.abs();
  BigFloat budget = projected.error;
  return {std::move(value), std::move(projected), std::move(residual), std::move(budget)};
}

ResidualReport kernel_relation_residual(int k, const Divisor& psi, const EmbeddingIndex& sigma,
                                        long precision_bits) {
  return kernel_relation_residual(k, psi, sigma, precision_bits, k);
}

ResidualReport kernel_relation_residual(int k, const Divisor& psi, const EmbeddingIndex& sigma, long precision_bits,
                                        int twist) {
  if (k < 1) throw std::invalid_argument("weight k must be >= 1, got " + std::to_string(k));
  if (!horospherical(k, psi).is_zero())
    throw std::invalid_argument("kernel_relation_residual: divisor is not in the kernel of rho^k");
  return li_combination_residual(k, psi, sigma, precision_bits, twist);
}

PsiURegulatorCheck verify_psi_u_regulator(int k, int u, int N, const EmbeddingIndex& sigma, long precision_bits) {
  if (sigma.modulus() != N) throw std::invalid_argument("verify_psi_u_regulator: modulus mismatch");
  const LiCombo combo = hodge_coefficients(k, psi_u(k, u, N));
  BigComplex lhs = proj_mod_Rk(k, evaluate(combo, sigma, precision_bits));
  BigComplex rhs =
      proj_mod_Rk(k, li_at_root_of_unity(k + 1, static_cast<long>(sigma.j()) * mod(u, N), N, precision_bits));
  BigFloat difference = (lhs - rhs).abs();
  BigFloat budget = lhs.error + rhs.error;
  return {std::move(lhs), std::move(rhs), std::move(difference), std::move(budget)};
}

}  // namespace ewb
