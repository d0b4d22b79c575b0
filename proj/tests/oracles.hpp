#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library routine it is used to check.

#include <array>
#include <vector>

#include <Eigen/Core>

#include "finsler3/scalar.hpp"

namespace finsler3::oracle {

/// Leibniz expansion over the six permutations of {0, 1, 2}.
template <class S>
S leibniz_det3(const Eigen::Matrix<S, 3, 3>& m) {
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  static constexpr int kSign[6] = {1, 1, 1, -1, -1, -1};
  S sum(0);
  for (int k = 0; k < 6; ++k) {
    S term = m(0, kPerm[k][0]) * m(1, kPerm[k][1]) * m(2, kPerm[k][2]);
    if (kSign[k] > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// Hermitian matrix built entry by entry from the component dictionary
/// X11 = X0+X3, X12 = X1-iX2, X13 = X4-iX5, X22 = X0-X3, X23 = X6-iX7, X33 = X8.
template <class R>
Eigen::Matrix<std::conditional_t<std::is_same_v<R, double>, FloatComplex, GaussianRational>, 3, 3> dictionary_matrix(
    const Eigen::Matrix<R, 9, 1>& x) {
  using S = std::conditional_t<std::is_same_v<R, double>, FloatComplex, GaussianRational>;
  Eigen::Matrix<S, 3, 3> m;
  m(0, 0) = S(x(0) + x(3));
  m(0, 1) = S(x(1), R(-x(2)));
  m(0, 2) = S(x(4), R(-x(5)));
  m(1, 0) = S(x(1), x(2));
  m(1, 1) = S(x(0) - x(3));
  m(1, 2) = S(x(6), R(-x(7)));
  m(2, 0) = S(x(4), x(5));
  m(2, 1) = S(x(6), x(7));
  m(2, 2) = S(x(8));
  return m;
}

/// Inverse of dictionary_matrix, read off entry by entry (input assumed Hermitian).
template <class S>
Eigen::Matrix<RealOf<S>, 9, 1> dictionary_components(const Eigen::Matrix<S, 3, 3>& m) {
  using R = RealOf<S>;
  Eigen::Matrix<R, 9, 1> x;
  const R half = R(1) / R(2);
  x(0) = half * (real(m(0, 0)) + real(m(1, 1)));
  x(3) = half * (real(m(0, 0)) - real(m(1, 1)));
  x(1) = real(m(1, 0));
  x(2) = imag(m(1, 0));
  x(4) = real(m(2, 0));
  x(5) = imag(m(2, 0));
  x(6) = real(m(2, 1));
  x(7) = imag(m(2, 1));
  x(8) = real(m(2, 2));
  return x;
}

/// The explicit degree-3 polynomial for |X|^3.
template <class R>
R cubic_polynomial(const Eigen::Matrix<R, 9, 1>& x) {
  const R two(2);
  return (x(0) * x(0) - x(1) * x(1) - x(2) * x(2) - x(3) * x(3)) * x(8) -
         x(0) * (x(4) * x(4) + x(5) * x(5) + x(6) * x(6) + x(7) * x(7)) + two * x(1) * (x(4) * x(6) + x(5) * x(7)) +
         two * x(2) * (x(5) * x(6) - x(4) * x(7)) + x(3) * (x(4) * x(4) + x(5) * x(5) - x(6) * x(6) - x(7) * x(7));
}

/// Adjugate from explicitly deleted rows/columns and a (-1)^{r+c} sign.
template <class S>
Eigen::Matrix<S, 3, 3> adjugate3(const Eigen::Matrix<S, 3, 3>& m) {
  Eigen::Matrix<S, 3, 3> adj;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      std::array<int, 2> rows{}, cols{};
      for (int k = 0, n = 0; k < 3; ++k)
        if (k != r) rows[static_cast<std::size_t>(n++)] = k;
      for (int k = 0, n = 0; k < 3; ++k)
        if (k != c) cols[static_cast<std::size_t>(n++)] = k;
      S minor = m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
      if ((r + c) % 2 == 1) minor = S(0) - minor;
      adj(c, r) = minor;  // transpose of the cofactor matrix
    }
  return adj;
}

/// Triple-loop dense product.
template <class S, int N>
Eigen::Matrix<S, N, N> naive_product(const Eigen::Matrix<S, N, N>& a, const Eigen::Matrix<S, N, N>& b) {
  Eigen::Matrix<S, N, N> c;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      S sum(0);
      for (int k = 0; k < N; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  return c;
}

/// Rank by column-oriented elimination on the transpose (exact scalars only).
template <class S, int Rows, int Cols>
int elimination_rank(const Eigen::Matrix<S, Rows, Cols>& m) {
  Eigen::Matrix<S, Cols, Rows> t = m.transpose();
  int rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(t.rows()), false);
  for (int c = static_cast<int>(t.cols()) - 1; c >= 0; --c) {
    int pivot = -1;
    for (int r = static_cast<int>(t.rows()) - 1; r >= 0; --r)
      if (!used[static_cast<std::size_t>(r)] && t(r, c) != S(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    used[static_cast<std::size_t>(pivot)] = true;
    ++rank;
    for (int r = 0; r < t.rows(); ++r) {
      if (r == pivot || t(r, c) == S(0)) continue;
      const S f = t(r, c) / t(pivot, c);
      for (int k = 0; k < t.cols(); ++k) t(r, k) -= f * t(pivot, k);
    }
  }
  return rank;
}

}  // namespace finsler3::oracle
