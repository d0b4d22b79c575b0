#pragma once

#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "finsler3/scalar.hpp"

namespace finsler3 {

/// Singular values at or below this are treated as zero on the float backend.
inline constexpr double kKernelThreshold = 1e-10;

/// Reduced row echelon form over an exact field. Returns the pivot columns.
template <class S, int Rows, int Cols>
std::vector<int> row_reduce(Eigen::Matrix<S, Rows, Cols>& m) {
  static_assert(is_exact_v<S>, "row_reduce requires an exact scalar type");
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(row).swap(m.row(pivot));
    const S inv = S(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S factor = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of {v : m v = 0}. Exact backend: one vector per free column with that
/// entry set to 1. Float backend: right singular vectors with sigma <= 1e-10.
template <class S, int Rows, int Cols>
std::vector<Eigen::Matrix<S, Cols, 1>> nullspace(const Eigen::Matrix<S, Rows, Cols>& m) {
  using Column = Eigen::Matrix<S, Cols, 1>;
  std::vector<Column> basis;
  if constexpr (is_exact_v<S>) {
    Eigen::Matrix<S, Rows, Cols> rref = m;
    const std::vector<int> pivots = row_reduce(rref);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int free = 0; free < m.cols(); ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      Column v = Column::Zero(m.cols());
      v(free) = S(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -rref(static_cast<int>(k), free);
      basis.push_back(std::move(v));
    }
  } else {
    using Dynamic = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::JacobiSVD<Dynamic> svd(Dynamic(m), Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    for (int k = 0; k < m.cols(); ++k) {
      const double s = k < sigma.size() ? sigma(k) : 0.0;
      if (s <= kKernelThreshold) basis.push_back(svd.matrixV().col(k));
    }
  }
  return basis;
}

/// Rank of m (exact, or by the same singular-value threshold).
template <class S, int Rows, int Cols>
int rank(const Eigen::Matrix<S, Rows, Cols>& m) {
  return static_cast<int>(m.cols()) - static_cast<int>(nullspace(m).size());
}

}  // namespace finsler3
