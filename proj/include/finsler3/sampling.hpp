#pragma once

// Seeded generators for verification campaigns. Trial t of a campaign with
// seed s always draws from Sampler(s, t), independent of the other trials.

#include <cmath>
#include <cstdint>
#include <random>

#include "finsler3/core_algebra.hpp"
#include "finsler3/duffin_kemmer.hpp"
#include "finsler3/isometry.hpp"

namespace finsler3 {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// Entries uniform in [-bound, bound].
  template <class R>
  NineVector<R> integer_vector(long bound) {
    NineVector<R> v;
    for (int a = 0; a < 9; ++a) v(a) = R(integer(-bound, bound));
    return v;
  }

  NineVector<double> float_vector() {
    NineVector<double> v;
    for (int a = 0; a < 9; ++a) v(a) = uniform(-1.0, 1.0);
    return v;
  }

  template <class S>
  Spinor3<S> integer_spinor(long bound) {
    Spinor3<S> v;
    for (int a = 0; a < 3; ++a) v(a) = gaussian_integer<S>(bound);
    return v;
  }

  template <class S>
  S gaussian_integer(long bound) {
    const long re = integer(-bound, bound);
    const long im = integer(-bound, bound);
    return make_complex<S>(RealOf<S>(re), RealOf<S>(im));
  }

  /// Product of `count` elementary transvections I + z E_rc (r != c) with
  /// Gaussian-integer z; the determinant is exactly 1.
  template <class S>
  SpinorMap<S> transvection_product(int count, long bound) {
    SpinorMap<S> d = SpinorMap<S>::Identity();
    for (int k = 0; k < count; ++k) {
      const int r = static_cast<int>(integer(0, 2));
      const int c = (r + static_cast<int>(integer(1, 2))) % 3;
      SpinorMap<S> t = SpinorMap<S>::Identity();
      t(r, c) = gaussian_integer<S>(bound);
      d = d * t;
    }
    return d;
  }

  /// Uniform entries in the complex unit box divided by a cube root of the
  /// determinant; samples with |det| < 1e-6 are redrawn.
  SpinorMap<FloatComplex> float_sl3() {
    for (;;) {
      SpinorMap<FloatComplex> d;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d(r, c) = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
      const FloatComplex det = d.determinant();
      if (std::abs(det) < 1e-6) continue;
      return d / std::pow(det, 1.0 / 3.0);
    }
  }

  /// Exact unit-determinant 2x2 matrix with Gaussian-rational entries:
  /// diag(q, 1/q) times two Gaussian-integer shears.
  Matrix2<GaussianRational> exact_sl2(long bound) {
    using S = GaussianRational;
    Matrix2<S> upper = Matrix2<S>::Identity();
    Matrix2<S> lower = Matrix2<S>::Identity();
    upper(0, 1) = gaussian_integer<S>(bound);
    lower(1, 0) = gaussian_integer<S>(bound);
    long num = 0;
    while (num == 0) num = integer(-bound, bound);
    const S q = S(Rational(num) / Rational(integer(1, bound)));
    Matrix2<S> scale = Matrix2<S>::Zero();
    scale(0, 0) = q;
    scale(1, 1) = S(1) / q;
    return scale * upper * lower;
  }

  Matrix2<FloatComplex> float_sl2() {
    for (;;) {
      Matrix2<FloatComplex> d;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) d(r, c) = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
      const FloatComplex det = d.determinant();
      if (std::abs(det) < 1e-6) continue;
      return d / std::sqrt(det);
    }
  }

  /// Exact momentum with det P = M^3: P = D diag(a, b, M^3/(ab)) D^+ for a
  /// random transvection product D and nonzero integers a, b.
  Momentum9<Rational> on_shell_momentum(const Rational& mass, long bound) {
    using S = GaussianRational;
    long a = 0, b = 0;
    while (a == 0) a = integer(-bound, bound);
    while (b == 0) b = integer(-bound, bound);
    Herm3<S> diag = Herm3<S>::Zero();
    diag(0, 0) = S(Rational(a));
    diag(1, 1) = S(Rational(b));
    diag(2, 2) = S(mass * mass * mass / (Rational(a) * Rational(b)));
    const SpinorMap<S> d = transvection_product<S>(3, 2);
    return components_from_herm(transform_herm(d, diag));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace finsler3
