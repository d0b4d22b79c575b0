#include <random>

#include <gtest/gtest.h>

#include "finsler3/core_algebra.hpp"
#include "finsler3/sampling.hpp"
#include "oracles.hpp"

namespace finsler3 {
namespace {

using S = GaussianRational;
using R = Rational;

Spinor3<S> spinor(int a, int b, int c) { return Spinor3<S>(S(a), S(b), S(c)); }

NineVector<R> nine(std::initializer_list<long> v) {
  NineVector<R> x;
  int k = 0;
  for (long e : v) x(k++) = R(e);
  return x;
}

TEST(Symplectic3, Normalization) { EXPECT_EQ(symplectic3(spinor(1, 0, 0), spinor(0, 1, 0), spinor(0, 0, 1)), S(1)); }

TEST(Symplectic3, VanishesOnDependentTriples) {
  Sampler rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto xi = rng.integer_spinor<S>(9);
    const auto eta = rng.integer_spinor<S>(9);
    EXPECT_EQ(symplectic3<S>(xi, xi, xi), S(0));
    EXPECT_EQ(symplectic3<S>(xi, eta, Spinor3<S>(S(2) * xi + S(3) * eta)), S(0));
  }
}

TEST(Symplectic3, EqualsDeterminantOfColumns) {
  Sampler rng(2);
  for (int t = 0; t < 200; ++t) {
    Matrix3<S> m;
    m << rng.integer_spinor<S>(9), rng.integer_spinor<S>(9), rng.integer_spinor<S>(9);
    ASSERT_EQ(symplectic3<S>(m.col(0), m.col(1), m.col(2)), oracle::leibniz_det3(m));
  }
}

TEST(Symplectic3, AntisymmetricAndTrilinearProperty) {
  Sampler rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = rng.integer_spinor<S>(5), b = rng.integer_spinor<S>(5), c = rng.integer_spinor<S>(5);
    const auto d = rng.integer_spinor<S>(5);
    const S k = rng.gaussian_integer<S>(5);
    const S v = symplectic3<S>(a, b, c);
    ASSERT_EQ(symplectic3<S>(b, a, c), -v);
    ASSERT_EQ(symplectic3<S>(a, c, b), -v);
    ASSERT_EQ(symplectic3<S>(c, b, a), -v);
    ASSERT_EQ(symplectic3<S>(Spinor3<S>(k * a + d), b, c), k * v + symplectic3<S>(d, b, c));
    ASSERT_EQ(symplectic3<S>(a, Spinor3<S>(k * b + d), c), k * v + symplectic3<S>(a, d, c));
    ASSERT_EQ(symplectic3<S>(a, b, Spinor3<S>(k * c + d)), k * v + symplectic3<S>(a, b, d));
  }
}

TEST(LambdaBasis, TraceDualityExact) {
  const auto& basis = lambda_basis<S>();
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) EXPECT_EQ((basis.upper[a] * basis.lower[b]).trace(), S(a == b ? 2 : 0)) << a << "," << b;
}

TEST(LambdaBasis, DualDiffersOnlyAtEight) {
  const auto& basis = lambda_basis<S>();
  for (int a = 0; a < 8; ++a) EXPECT_EQ(basis.upper[a], basis.lower[a]);
  EXPECT_EQ(basis.upper[8], basis.lower[8] * S(2));
  for (const auto& m : basis.lower) EXPECT_TRUE(is_hermitian<S>(m));
}

TEST(HermFromComponents, Examples) {
  EXPECT_EQ(herm_from_components(nine({1, 0, 0, 0, 0, 0, 0, 0, 0})), lambda_basis<S>().lower[0]);
  Herm3<S> expected = Herm3<S>::Zero();
  expected(0, 0) = S(2);
  EXPECT_EQ(herm_from_components(nine({1, 0, 0, 1, 0, 0, 0, 0, 0})), expected);
  EXPECT_EQ(herm_from_components(NineVector<R>(NineVector<R>::Zero())), Herm3<S>::Zero());
}

TEST(HermFromComponents, MatchesEntryDictionary) {
  Sampler rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto x = rng.integer_vector<R>(9);
    ASSERT_EQ(herm_from_components(x), oracle::dictionary_matrix(x));
  }
}

TEST(ComponentsFromHerm, Examples) {
  EXPECT_EQ(components_from_herm<S>(lambda_basis<S>().lower[0]), nine({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(components_from_herm<S>(Herm3<S>::Identity()), nine({1, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(ComponentsFromHerm, RejectsNonHermitian) {
  Herm3<S> m = Herm3<S>::Identity();
  m(0, 1) = S(1);
  EXPECT_THROW(components_from_herm<S>(m), std::invalid_argument);
  Herm3<S> imaginary_diagonal = Herm3<S>::Zero();
  imaginary_diagonal(1, 1) = S::i();
  EXPECT_THROW(components_from_herm<S>(imaginary_diagonal), std::invalid_argument);
}

TEST(ComponentsFromHerm, FloatHermiticityTolerance) {
  Herm3<FloatComplex> m = Herm3<FloatComplex>::Identity();
  m(0, 1) = {1.0, 0.0};
  m(1, 0) = {1.0 + 5e-13, 0.0};
  EXPECT_NO_THROW(components_from_herm<FloatComplex>(m));
  m(1, 0) = {1.0 + 1e-9, 0.0};
  EXPECT_THROW(components_from_herm<FloatComplex>(m), std::invalid_argument);
}

TEST(ComponentsFromHerm, RoundTripBothWays) {
  Sampler rng(5);
  for (int t = 0; t < 100; ++t) {
    const NineVector<R> v = rng.integer_vector<R>(9);
    ASSERT_EQ(components_from_herm(herm_from_components(v)), v);
    const Herm3<S> x = oracle::dictionary_matrix(NineVector<R>(rng.integer_vector<R>(9)));
    ASSERT_EQ(herm_from_components(components_from_herm(x)), x);
  }
}

TEST(CubicTensor, PolarizedComponents) {
  const auto& g = cubic_tensor();
  EXPECT_EQ(g(0, 0, 8), R(1, 3));
  EXPECT_EQ(g(1, 1, 1), R(0));
  EXPECT_EQ(g(1, 4, 6), R(1, 3));
  EXPECT_EQ(g(0, 0, 0), R(0));
  EXPECT_EQ(g(1, 1, 8), R(-1, 3));
  EXPECT_EQ(g(2, 4, 7), R(-1, 3));
  EXPECT_EQ(g(3, 6, 6), R(-1, 3));
  EXPECT_THROW(g(0, 0, 9), std::out_of_range);
}

TEST(CubicTensor, SymmetricAccess) {
  const auto& g = cubic_tensor();
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c) {
        ASSERT_EQ(g(a, b, c), g(b, a, c));
        ASSERT_EQ(g(a, b, c), g(c, b, a));
        ASSERT_EQ(g(a, b, c), g(a, c, b));
      }
}

TEST(CubicTensor, PackedIndexCoversIndependentComponents) {
  std::vector<bool> seen(CubicTensor::kIndependent, false);
  for (int a = 0; a < 9; ++a)
    for (int b = a; b < 9; ++b)
      for (int c = b; c < 9; ++c) {
        const int k = CubicTensor::packed_index(a, b, c);
        ASSERT_GE(k, 0);
        ASSERT_LT(k, CubicTensor::kIndependent);
        ASSERT_FALSE(seen[static_cast<std::size_t>(k)]);
        seen[static_cast<std::size_t>(k)] = true;
      }
}

TEST(CubicTensor, SixteenMonomials) {
  // The explicit polynomial has 16 distinct monomials.
  EXPECT_EQ(cubic_tensor().nonzero_terms().size(), 16u);
}

TEST(CubicTensor, PolarFormIsSymmetricTrilinear) {
  Sampler rng(6);
  const auto& g = cubic_tensor();
  for (int t = 0; t < 20; ++t) {
    const auto x = rng.integer_vector<R>(4), y = rng.integer_vector<R>(4), z = rng.integer_vector<R>(4);
    ASSERT_EQ(g.polar(x, y, z), g.polar(z, x, y));
    ASSERT_EQ(g.polar(x, x, x), g.contract(x));
  }
}

TEST(LengthCubed, Examples) {
  EXPECT_EQ(length_cubed(nine({1, 0, 0, 0, 0, 0, 0, 0, 1})), R(1));
  EXPECT_EQ(length_cubed(nine({1, 0, 0, 0, 0, 0, 0, 0, 0})), R(0));
  EXPECT_EQ(length_cubed(nine({1, 2, 3, 4, 5, 6, 7, 8, 9})), R(-290));
  EXPECT_EQ(length_cubed(nine({3, -1, 2, 0, 1, -2, 4, 0, 5})), R(-83));
}

TEST(LengthCubed, AgreesWithPolynomialAndDeterminant) {
  Sampler rng(7);
  for (int t = 0; t < 1000; ++t) {
    const auto x = rng.integer_vector<R>(9);
    const R v = length_cubed(x);
    ASSERT_EQ(v, oracle::cubic_polynomial(x));
    ASSERT_EQ(v, real(oracle::leibniz_det3(oracle::dictionary_matrix(x))));
  }
}

TEST(LengthCubed, ZeroIffSingular) {
  Sampler rng(8);
  for (int t = 0; t < 50; ++t) {
    // Rank-deficient Hermitian matrices u u^+ + v v^+.
    const auto u = rng.integer_spinor<S>(4), v = rng.integer_spinor<S>(4);
    const Herm3<S> singular = u * u.adjoint() + v * v.adjoint();
    ASSERT_EQ(length_cubed(components_from_herm<S>(singular)), R(0));
  }
  EXPECT_NE(length_cubed(nine({1, 0, 0, 0, 0, 0, 0, 0, 1})), R(0));
  EXPECT_NE(length_cubed(nine({0, 0, 0, 0, 1, 0, 0, 0, 0})), R(0) + R(1));
}

TEST(LengthCubed, FloatBackendMatches) {
  Sampler rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto x = rng.float_vector();
    ASSERT_NEAR(length_cubed(x), oracle::cubic_polynomial(x), 1e-12);
  }
}

TEST(Length, RealCubeRoot) {
  EXPECT_DOUBLE_EQ(length(nine({1, 0, 0, 0, 0, 0, 0, 0, 1})), 1.0);
  EXPECT_DOUBLE_EQ(length(nine({1, 0, 0, 0, 0, 0, 0, 0, -1})), -1.0);
  EXPECT_NEAR(length(nine({1, 2, 3, 4, 5, 6, 7, 8, 9})), -std::cbrt(290.0), 1e-12);
}

TEST(Length, HomogeneousOfDegreeOne) {
  Sampler rng(10);
  for (int t = 0; t < 100; ++t) {
    const auto x = rng.float_vector();
    const double s = rng.uniform(0.1, 5.0);
    ASSERT_NEAR(length(NineVector<double>(s * x)), s * length(x), 1e-10);
  }
}

}  // namespace
}  // namespace finsler3
