#pragma once

// SL(3,C) acting on spinors and on Herm(3), the induced 9x9 representation
// L(D), the SL(2,C) embedding and the 4 + 4 + 1 splitting of a 9-vector
// into a Lorentz vector, a Majorana spinor and a scalar.

#include <array>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/LU>

#include "finsler3/core_algebra.hpp"

namespace finsler3 {

template <class S>
using Matrix2 = Eigen::Matrix<S, 2, 2>;
template <class S>
using Matrix4 = Eigen::Matrix<S, 4, 4>;
template <class R>
using Vector4 = Eigen::Matrix<R, 4, 1>;

/// Linear map xi -> D xi on 3-spinors.
template <class S>
using SpinorMap = Matrix3<S>;
/// Real 9x9 matrix L^A_B acting on lambda-basis components.
template <class R>
using NineMap = Eigen::Matrix<R, 9, 9>;

template <class S>
bool has_unit_determinant(const S& det) {
  return approx_equal<S>(det, S(1));
}

/// det D = 1, exactly or within 1e-12.
template <class S>
bool is_special(const SpinorMap<S>& d) {
  return has_unit_determinant<S>(d.determinant());
}

template <class S>
Spinor3<S> transform_spinor(const SpinorMap<S>& d, const Spinor3<S>& xi) {
  return d * xi;
}

/// X' = D X D^+.
template <class S>
Herm3<S> transform_herm(const SpinorMap<S>& d, const Herm3<S>& x) {
  if (!is_hermitian<S>(x)) throw std::invalid_argument("transform_herm: matrix is not Hermitian");
  return d * x * d.adjoint();
}

/// L(D)^A_B = 1/2 Tr(lambda^A D lambda_B D^+).
template <class S>
NineMap<RealOf<S>> induced_matrix(const SpinorMap<S>& d) {
  using R = RealOf<S>;
  const auto& basis = lambda_basis<S>();
  const SpinorMap<S> d_adj = d.adjoint();
  NineMap<R> out;
  for (int b = 0; b < 9; ++b) {
    const Matrix3<S> image = d * basis.lower[b] * d_adj;
    for (int a = 0; a < 9; ++a) out(a, b) = real((basis.upper[a] * image).trace()) / R(2);
  }
  return out;
}

/// Places d in the upper-left block of a 3x3 identity.
template <class S>
SpinorMap<S> embed_sl2(const Matrix2<S>& d) {
  if (!has_unit_determinant<S>(d.determinant())) throw std::invalid_argument("embed_sl2: det d != 1");
  SpinorMap<S> out = SpinorMap<S>::Identity();
  out.template topLeftCorner<2, 2>() = d;
  return out;
}

template <class R>
struct BlockTables {
  Matrix4<R> lorentz;   // L(D2)^alpha_beta, alpha, beta = 0..3
  Matrix4<R> majorana;  // M(D2)^i_j = L(D2)^{3+i}_{3+j}
};

/// Closed-form entries of the Lorentz and Majorana blocks of L(D2).
template <class S>
BlockTables<RealOf<S>> sl2_block_tables(const Matrix2<S>& d) {
  if (!has_unit_determinant<S>(d.determinant())) throw std::invalid_argument("sl2_block_tables: det d != 1");
  using R = RealOf<S>;
  const S half = S(1) / S(2);
  const S ihalf = imaginary_unit<S>() * half;
  const S d11 = d(0, 0), d12 = d(0, 1), d21 = d(1, 0), d22 = d(1, 1);
  const S c11 = conj(d11), c12 = conj(d12), c21 = conj(d21), c22 = conj(d22);

  Matrix4<S> l;
  l(0, 0) = half * (d11 * c11 + d12 * c12 + d21 * c21 + d22 * c22);
  l(0, 1) = half * (d11 * c12 + d21 * c22 + d12 * c11 + d22 * c21);
  l(0, 2) = ihalf * (d12 * c11 + d22 * c21 - d11 * c12 - d21 * c22);
  l(0, 3) = half * (d11 * c11 + d21 * c21 - d12 * c12 - d22 * c22);
  l(1, 0) = half * (d11 * c21 + d21 * c11 + d12 * c22 + d22 * c12);
  l(1, 1) = half * (d11 * c22 + d21 * c12 + d12 * c21 + d22 * c11);
  l(1, 2) = ihalf * (d12 * c21 + d22 * c11 - d11 * c22 - d21 * c12);
  l(1, 3) = half * (d11 * c21 + d21 * c11 - d12 * c22 - d22 * c12);
  l(2, 0) = ihalf * (d11 * c21 - d21 * c11 + d12 * c22 - d22 * c12);
  l(2, 1) = ihalf * (d11 * c22 - d21 * c12 + d12 * c21 - d22 * c11);
  l(2, 2) = half * (d11 * c22 + d22 * c11 - d12 * c21 - d21 * c12);
  l(2, 3) = ihalf * (d11 * c21 - d21 * c11 - d12 * c22 + d22 * c12);
  l(3, 0) = half * (d11 * c11 - d21 * c21 + d12 * c12 - d22 * c22);
  l(3, 1) = half * (d11 * c12 - d21 * c22 + d12 * c11 - d22 * c21);
  l(3, 2) = ihalf * (d12 * c11 - d22 * c21 - d11 * c12 + d21 * c22);
  l(3, 3) = half * (d11 * c11 - d12 * c12 - d21 * c21 + d22 * c22);

  Matrix4<S> m;
  m(0, 0) = half * (c11 + d11);
  m(0, 1) = ihalf * (c11 - d11);
  m(0, 2) = half * (c12 + d12);
  m(0, 3) = ihalf * (c12 - d12);
  m(1, 0) = ihalf * (d11 - c11);
  m(1, 1) = half * (d11 + c11);
  m(1, 2) = ihalf * (d12 - c12);
  m(1, 3) = half * (d12 + c12);
  m(2, 0) = half * (c21 + d21);
  m(2, 1) = ihalf * (c21 - d21);
  m(2, 2) = half * (c22 + d22);
  m(2, 3) = ihalf * (c22 - d22);
  m(3, 0) = ihalf * (d21 - c21);
  m(3, 1) = half * (d21 + c21);
  m(3, 2) = ihalf * (d22 - c22);
  m(3, 3) = half * (d22 + c22);

  BlockTables<R> out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      out.lorentz(r, c) = real(l(r, c));
      out.majorana(r, c) = real(m(r, c));
    }
  return out;
}

/// A 9-vector seen by a 4-dimensional observer.
template <class R>
struct ReducedVector {
  Vector4<R> four_vector;  // X^0..X^3
  Vector4<R> majorana;     // theta^j = X^{3+j}
  R scalar;                // X^8

  NineVector<R> concatenate() const {
    NineVector<R> x;
    x << four_vector, majorana, scalar;
    return x;
  }
};

template <class R>
ReducedVector<R> reduce(const NineVector<R>& x) {
  return {x.template segment<4>(0), x.template segment<4>(4), x(8)};
}

/// diag(1, -1, -1, -1).
template <class R>
Matrix4<R> minkowski_metric() {
  return Vector4<R>(R(1), R(-1), R(-1), R(-1)).asDiagonal();
}

/// Dirac matrices in the Majorana representation (all entries 0 or +-i).
template <class S>
const std::array<Matrix4<S>, 4>& majorana_gammas() {
  static const std::array<Matrix4<S>, 4> gammas = [] {
    const S i = imaginary_unit<S>();
    const S o(0);
    std::array<Matrix4<S>, 4> g;
    g[0] << o, o, i, o,
            o, o, o, -i,
            -i, o, o, o,
            o, i, o, o;
    g[1] << i, o, o, o,
            o, -i, o, o,
            o, o, -i, o,
            o, o, o, i;
    g[2] << o, i, o, o,
            i, o, o, o,
            o, o, o, i,
            o, o, i, o;
    g[3] << o, o, -i, o,
            o, o, o, i,
            -i, o, o, o,
            o, i, o, o;
    return g;
  }();
  return gammas;
}

/// |X|^3 = g_mn X^m X^n X^8 - g_mn X^m (thetabar gamma^n theta), thetabar = theta^T gamma^0.
template <class R>
R length_cubed_4d(const ReducedVector<R>& r) {
  using S = ComplexOf<R>;
  const auto& gamma = majorana_gammas<S>();
  const Vector4<R> g = Vector4<R>(R(1), R(-1), R(-1), R(-1));
  const Eigen::Matrix<S, 4, 1> theta = r.majorana.template cast<S>();
  const Eigen::Matrix<S, 1, 4> theta_bar = theta.transpose() * gamma[0];

  R interval(0);
  R spinor_part(0);
  for (int mu = 0; mu < 4; ++mu) {
    interval += g(mu) * r.four_vector(mu) * r.four_vector(mu);
    const S bilinear = (theta_bar * gamma[mu] * theta)(0, 0);
    spinor_part += g(mu) * r.four_vector(mu) * real(bilinear);
  }
  return interval * r.scalar - spinor_part;
}

}  // namespace finsler3
