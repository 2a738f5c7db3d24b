#pragma once

#include <vector>

#include "ewb/exact/rational.hpp"
#include "ewb/modular/divisor.hpp"
#include "ewb/modular/mod_matrix.hpp"

namespace ewb {

/// rho^k(psi)(g) = N^k/(k!(k+2)) sum_t psi(t) B_{k+2}((gt)_2/N).
Rational horospherical_value(int k, const Divisor& psi, const ModMatrix& g);

/// Same value from the unsubstituted sum over psi(g^{-1} t) B_{k+2}(t_2/N);
/// kept as an independent cross-check of the change of variables.
Rational horospherical_value_literal(int k, const Divisor& psi, const ModMatrix& g);

/// Evaluates at every coset representative; the parity invariant is checked
/// by the IsomFunction constructor.
IsomFunction horospherical(int k, const Divisor& psi);

/// 1 on P, (-1)^k on -P, 0 elsewhere.
IsomFunction phi_infinity(int k, int N);

/// True iff f vanishes on the cosets of P and -P.
bool is_in_isom_minus_infinity(const IsomFunction& f);

/// (-1)^{k+1}/N^{k-1} (u,0) - (-1)^{k+1} N^2/(1-N^{k+1}) sum_{v != 0} (u,v).
/// Requires k >= 1 and u != 0 mod N.
Divisor psi_u(int k, int u, int N);

/// Matrix of rho^k: rows follow coset_representatives(N), columns follow
/// nonzero_points(N).
MatrixQ horospherical_matrix(int k, int N);

/// Exact basis of ker rho^k on all divisors or on the degree-0 subspace.
std::vector<Divisor> kernel_basis(int k, int N, bool restrict_degree_zero);

struct SurjectivityReport {
  int N = 0;
  int k = 0;
  int rank_full = 0;
  int rank_degree_zero = 0;
  int target = 0;  ///< dim Q[Isom]^(k)
  bool surjective_full() const { return rank_full == target; }
  bool surjective_degree_zero() const { return rank_degree_zero == target; }
};

SurjectivityReport surjectivity_report(int k, int N);

/// Coefficient (-1)^{k+1}/(k! N) psi(t,0) at c^k(zeta^t). The residue-zero
/// hypothesis is evaluated and reported, never enforced.
CyclotomicCombo dir_l_coefficients(int k, const Divisor& psi);

/// Coefficient (-1)^{k+1} N^{k-1} psi(t,0) at Li_{k+1}(zeta^t).
LiCombo hodge_coefficients(int k, const Divisor& psi);

/// -N/((k+2) k!) B_{k+2}((gt)_2/N).
Rational torsion_residue(int k, const ModMatrix& g, const TorsionPoint& t);

struct ConsistencyCheck {
  bool holds;
  Rational lhs;  ///< rho^k(psi)(g)
  Rational rhs;  ///< -N^{k-1} sum_t psi(t) torsion_residue(k, g, t)
};

ConsistencyCheck residue_consistency_check(int k, const Divisor& psi, const ModMatrix& g);

}  // namespace ewb
