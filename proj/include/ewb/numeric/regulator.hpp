#pragma once

#include <vector>

#include "ewb/modular/divisor.hpp"
#include "ewb/numeric/bigfloat.hpp"

namespace ewb {

/// sigma_j : zeta -> e^{2 pi i j/N}, gcd(j, N) = 1.
class EmbeddingIndex {
 public:
  /// Throws std::invalid_argument unless j is a unit mod N.
  EmbeddingIndex(int j, int N);
  int j() const { return j_; }
  int modulus() const { return n_; }

 private:
  int j_;
  int n_;
};

/// All embeddings in increasing order of j in [1, N).
std::vector<EmbeddingIndex> embeddings(int N);

/// sum_u q_u Li_{k+1}(sigma(zeta^u)).
BigComplex evaluate(const LiCombo& combo, const EmbeddingIndex& sigma, long precision_bits);

struct ResidualReport {
  BigComplex value;     ///< sum_t psi(t,0) Li_{k+1}(sigma(zeta^t))
  BigComplex projected; ///< value mod R(twist)
  BigFloat residual;    ///< |projected|
  BigFloat error_budget;
};

/// |proj mod R(twist) of sum_t psi(t,0) Li_{k+1}(e^{2 pi i j t/N})| without
/// checking that psi is in the kernel; used for negative controls.
ResidualReport li_combination_residual(int k, const Divisor& psi, const EmbeddingIndex& sigma, long precision_bits,
                                       int twist);

/// Same with twist = k; requires rho^k(psi) = 0 exactly and k >= 1.
ResidualReport kernel_relation_residual(int k, const Divisor& psi, const EmbeddingIndex& sigma,
                                        long precision_bits);
ResidualReport kernel_relation_residual(int k, const Divisor& psi, const EmbeddingIndex& sigma,
                                        long precision_bits, int twist);

struct PsiURegulatorCheck {
  BigComplex lhs;  ///< Hodge-regulator formula on psi_u, mod R(k)
  BigComplex rhs;  ///< Li_{k+1}(sigma(zeta^u)) mod R(k)
  BigFloat difference;
  BigFloat error_budget;
};

PsiURegulatorCheck verify_psi_u_regulator(int k, int u, int N, const EmbeddingIndex& sigma, long precision_bits);

}  // namespace ewb
