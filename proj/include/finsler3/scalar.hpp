#pragma once

// Scalar backends. Every routine in the library is templated on a complex
// scalar type: GaussianRational for exact certification, std::complex<double>
// for floating-point sampling. Real-valued quantities use NumTraits<S>::Real,
// i.e. Rational or double respectively.

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace finsler3 {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianRational& operator+=(const GaussianRational& o) {
    if (!o.re_.is_zero()) re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    if (!o.re_.is_zero()) re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    // Most operands in the 12x12 algebra are sparse or purely real/imaginary.
    if (a.is_zero() || b.is_zero()) return {};
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, Rational(0)};
    if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
    if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
    const Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / norm, (a.im_ * b.re_ - a.re_ * b.im_) / norm};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << '(' << z.re_ << ',' << z.im_ << ')';
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// ADL hooks used by Eigen (numext::conj/real/imag/abs2) and by generic code.
inline GaussianRational conj(const GaussianRational& z) { return {z.real(), -z.imag()}; }
inline const Rational& real(const GaussianRational& z) { return z.real(); }
inline const Rational& imag(const GaussianRational& z) { return z.imag(); }
inline Rational abs2(const GaussianRational& z) { return z.real() * z.real() + z.imag() * z.imag(); }
inline Rational norm(const GaussianRational& z) { return abs2(z); }

using FloatComplex = std::complex<double>;

template <class S>
using RealOf = typename Eigen::NumTraits<S>::Real;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, GaussianRational> || std::is_same_v<S, Rational>;

/// Absolute tolerance used for floating-point comparisons of O(1) quantities.
inline constexpr double kFloatTolerance = 1e-12;

template <class S>
S make_complex(const RealOf<S>& re, const RealOf<S>& im) {
  return S(re, im);
}

template <class S>
S imaginary_unit() {
  return make_complex<S>(RealOf<S>(0), RealOf<S>(1));
}

/// Exact zero test in the exact backend; |z| <= tol in floating point.
template <class S>
bool is_zero(const S& z, double tol = kFloatTolerance) {
  if constexpr (is_exact_v<S>) {
    return z == S(0);
  } else {
    return std::abs(z) <= tol;
  }
}

template <class S>
bool approx_equal(const S& a, const S& b, double tol = kFloatTolerance) {
  return is_zero<S>(a - b, tol);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline FloatComplex to_float(const GaussianRational& z) {
  return {to_double(z.real()), to_double(z.imag())};
}
inline FloatComplex to_float(const FloatComplex& z) { return z; }

/// Every finite double is a dyadic rational, so the conversion is exact.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite value");
  return Rational(x);
}

inline GaussianRational exact_from_float(const FloatComplex& z) {
  return {rational_from_double(z.real()), rational_from_double(z.imag())};
}

/// Converts a real value of either backend into the real type of S.
template <class S>
RealOf<S> real_cast(const Rational& q) {
  if constexpr (is_exact_v<S>) {
    return q;
  } else {
    return to_double(q);
  }
}

/// Parses "p", "p/q", or a decimal literal ("0.25", "-1e-3") as an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" string; the denominator is always printed.
std::string format_rational(const Rational& q);

}  // namespace finsler3

namespace Eigen {

template <>
struct NumTraits<finsler3::GaussianRational> : GenericNumTraits<finsler3::GaussianRational> {
  using Real = finsler3::Rational;
  using NonInteger = finsler3::GaussianRational;
  using Literal = finsler3::GaussianRational;
  using Nested = finsler3::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 80
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
