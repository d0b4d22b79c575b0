#pragma once

// Shared JSON number encoding:
//   exact rational    -> "p/q" string
//   double            -> JSON number
//   complex           -> [re, im] with each part encoded as above
//   matrix            -> row-major array of arrays; column vectors are flat arrays

#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "finsler3/duffin_kemmer.hpp"
#include "finsler3/scalar.hpp"

namespace finsler3 {

using Json = nlohmann::ordered_json;

inline Json encode(const Rational& q) { return format_rational(q); }
inline Json encode(double x) { return x; }
inline Json encode(const GaussianRational& z) { return Json::array({encode(z.real()), encode(z.imag())}); }
inline Json encode(const FloatComplex& z) { return Json::array({z.real(), z.imag()}); }

template <class Derived>
Json encode(const Eigen::MatrixBase<Derived>& m) {
  Json out = Json::array();
  if (m.cols() == 1) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(encode(m(r, 0)));
    return out;
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// Inverse of encode for exact values: accepts "p/q" strings and JSON integers.
Rational decode_rational(const Json& j);
GaussianRational decode_gaussian(const Json& j);

/// {"delta_0": [[[re, im], ...], ...], ..., "delta_8": ...} with integer pairs.
Json delta_dump();

/// Reads a dump written by delta_dump back into exact matrices.
std::array<PhatMatrix<GaussianRational>, 9> parse_delta_dump(const Json& j);

/// Solver document: momentum, mass, on_shell, kernel_dimension, basis, residual_max_abs.
template <class R>
Json solver_document(const Momentum9<R>& p, const MassShell<R>& mass) {
  using S = ComplexOf<R>;
  const auto basis = solve(p, mass);
  const R det = length_cubed(p);
  const R m3 = mass.value() * mass.value() * mass.value();

  Json doc;
  doc["momentum"] = encode(p);
  doc["mass"] = encode(mass.value());
  if constexpr (is_exact_v<R>) {
    doc["on_shell"] = det == m3;
  } else {
    doc["on_shell"] = std::abs(det - m3) <= 1e-10 * std::max(1.0, std::abs(m3));
  }
  doc["kernel_dimension"] = basis.size();
  doc["basis"] = Json::array();
  double worst = 0.0;
  for (const auto& psi : basis) {
    doc["basis"].push_back(encode(psi));
    const TwelveColumn<S> res = twelve_residual(p, mass, psi);
    for (int k = 0; k < 12; ++k) worst = std::max(worst, std::abs(to_float(res(k))));
  }
  doc["residual_max_abs"] = worst;
  return doc;
}

}  // namespace finsler3
