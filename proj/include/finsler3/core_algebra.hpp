#pragma once

// Finslerian 3-spinors, the 9-dimensional real space Herm(3) of Hermitian
// 3x3 matrices with its lambda-basis, and the cubic Finslerian length
// |X|^3 = det X = G_ABC X^A X^B X^C.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "finsler3/scalar.hpp"

namespace finsler3 {

template <class R>
struct complex_of;
template <>
struct complex_of<Rational> {
  using type = GaussianRational;
};
template <>
struct complex_of<double> {
  using type = FloatComplex;
};
template <class R>
using ComplexOf = typename complex_of<R>::type;

template <class S>
using Matrix3 = Eigen::Matrix<S, 3, 3>;
template <class S>
using Spinor3 = Eigen::Matrix<S, 3, 1>;
/// A Hermitian 3x3 matrix; the invariant is checked at API boundaries.
template <class S>
using Herm3 = Matrix3<S>;
/// Real components X^0..X^8 in the lambda-basis.
template <class R>
using NineVector = Eigen::Matrix<R, 9, 1>;

template <class S>
bool is_hermitian(const Matrix3<S>& x, double tol = kFloatTolerance) {
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      if (!approx_equal<S>(x(a, b), conj(x(b, a)), tol)) return false;
  return true;
}

/// Symplectic scalar 3-product [xi, eta, lambda] = eps_abc xi^a eta^b lambda^c.
template <class S>
S symplectic3(const Spinor3<S>& xi, const Spinor3<S>& eta, const Spinor3<S>& lambda) {
  static constexpr int kEven[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  S sum(0);
  for (const auto& p : kEven) {
    sum += xi(p[0]) * eta(p[1]) * lambda(p[2]);
    sum -= xi(p[0]) * eta(p[2]) * lambda(p[1]);
  }
  return sum;
}

/// The nine basis matrices lambda_A and their duals lambda^A, where
/// lambda^A = lambda_A except lambda^8 = 2 lambda_8, so that
/// Tr(lambda^A lambda_B) = 2 delta^A_B.
template <class S>
struct LambdaBasis {
  std::array<Matrix3<S>, 9> lower;
  std::array<Matrix3<S>, 9> upper;
};

template <class S>
const LambdaBasis<S>& lambda_basis() {
  static const LambdaBasis<S> basis = [] {
    const S one(1);
    const S i = imaginary_unit<S>();
    LambdaBasis<S> b;
    for (auto& m : b.lower) m.setZero();
    b.lower[0](0, 0) = one;
    b.lower[0](1, 1) = one;
    b.lower[1](0, 1) = one;
    b.lower[1](1, 0) = one;
    b.lower[2](0, 1) = -i;
    b.lower[2](1, 0) = i;
    b.lower[3](0, 0) = one;
    b.lower[3](1, 1) = -one;
    b.lower[4](0, 2) = one;
    b.lower[4](2, 0) = one;
    b.lower[5](0, 2) = -i;
    b.lower[5](2, 0) = i;
    b.lower[6](1, 2) = one;
    b.lower[6](2, 1) = one;
    b.lower[7](1, 2) = -i;
    b.lower[7](2, 1) = i;
    b.lower[8](2, 2) = one;
    b.upper = b.lower;
    b.upper[8] *= S(2);
    return b;
  }();
  return basis;
}

/// X = X^A lambda_A.
template <class R>
Herm3<ComplexOf<R>> herm_from_components(const NineVector<R>& x) {
  using S = ComplexOf<R>;
  const auto& basis = lambda_basis<S>();
  Herm3<S> out = Herm3<S>::Zero();
  for (int a = 0; a < 9; ++a) {
    if (x(a) == R(0)) continue;
    out += basis.lower[a] * S(x(a));
  }
  return out;
}

/// X^A = 1/2 Tr(lambda^A X). Throws std::invalid_argument on non-Hermitian input.
template <class S>
NineVector<RealOf<S>> components_from_herm(const Herm3<S>& x) {
  if (!is_hermitian<S>(x)) throw std::invalid_argument("components_from_herm: matrix is not Hermitian");
  const auto& basis = lambda_basis<S>();
  NineVector<RealOf<S>> out;
  for (int a = 0; a < 9; ++a) {
    const S tr = (basis.upper[a] * x).trace();
    out(a) = real(tr) / RealOf<S>(2);
  }
  return out;
}

/// Totally symmetric cubic form on Herm(3) with G_ABC X^A X^B X^C = det X.
/// Only the 165 components with A <= B <= C are stored.
class CubicTensor {
 public:
  static constexpr int kDim = 9;
  static constexpr int kIndependent = 165;

  struct Term {
    int a, b, c;
    int multiplicity;  // number of distinct orderings of (a, b, c)
    Rational value;    // G_abc
  };

  /// Builds the tensor by polarizing the determinant on the lambda-basis.
  CubicTensor();

  /// G_abc for any ordering of the indices.
  const Rational& operator()(int a, int b, int c) const;

  /// Nonzero components, sorted lexicographically by (a, b, c).
  const std::vector<Term>& nonzero_terms() const { return terms_; }

  /// G_ABC x^A x^B x^C.
  template <class R>
  R contract(const NineVector<R>& x) const {
    R sum(0);
    for (const auto& t : terms_) sum += weight<R>(t) * x(t.a) * x(t.b) * x(t.c);
    return sum;
  }

  /// Full trilinear form G_ABC x^A y^B z^C.
  template <class R>
  R polar(const NineVector<R>& x, const NineVector<R>& y, const NineVector<R>& z) const {
    R sum(0);
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) {
          const Rational& g = (*this)(a, b, c);
          if (!g.is_zero()) sum += real_cast<ComplexOf<R>>(g) * x(a) * y(b) * z(c);
        }
    return sum;
  }

  static int packed_index(int a, int b, int c);

 private:
  template <class R>
  static R weight(const Term& t) {
    if constexpr (std::is_same_v<R, Rational>) {
      return t.value * t.multiplicity;
    } else {
      return to_double(t.value) * t.multiplicity;
    }
  }

  std::array<Rational, kIndependent> packed_{};
  std::vector<Term> terms_;
};

/// Process-wide instance, built on first use.
const CubicTensor& cubic_tensor();

/// |X|^3 = G_ABC X^A X^B X^C; indefinite in sign.
template <class R>
R length_cubed(const NineVector<R>& x) {
  return cubic_tensor().contract(x);
}

/// Real cube root of |X|^3. Negative lengths are kept negative.
inline double length(const NineVector<double>& x) { return std::cbrt(length_cubed(x)); }
inline double length(const NineVector<Rational>& x) { return std::cbrt(to_double(length_cubed(x))); }

}  // namespace finsler3
