#pragma once

#include <vector>

#include <Eigen/Core>

#include "ewb/exact/rational.hpp"

namespace ewb {

/// Reduced row echelon form computed by exact Gauss-Jordan elimination.
/// Only meaningful for exact scalars (no pivoting tolerance is applied).
template <typename Scalar>
struct RowEchelon {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivot_columns;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m.eval(), {}};
  auto& a = out.reduced;
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == zero) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == zero) continue;
      const Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Columns form a basis of {v : m v = 0}, one per free column, each with a 1
/// in its free position.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n - ech.rank(), Scalar(0));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) basis(ech.pivot_columns[static_cast<std::size_t>(r)], out) = -ech.reduced(r, free);
    ++out;
  }
  return basis;
}

}  // namespace ewb
