#include "finsler3/json_io.hpp"

#include <stdexcept>

namespace finsler3 {

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("decode_rational: expected \"p/q\" string or integer");
}

GaussianRational decode_gaussian(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("decode_gaussian: expected [re, im]");
  return {decode_rational(j[0]), decode_rational(j[1])};
}

Json delta_dump() {
  const auto& deltas = delta_family<GaussianRational>();
  Json doc;
  for (int a = 0; a < 9; ++a) {
    Json rows = Json::array();
    for (int r = 0; r < 12; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 12; ++c) {
        const auto& z = deltas[a](r, c);
        row.push_back(Json::array({z.real().convert_to<long long>(), z.imag().convert_to<long long>()}));
      }
      rows.push_back(std::move(row));
    }
    doc["delta_" + std::to_string(a)] = std::move(rows);
  }
  return doc;
}

std::array<PhatMatrix<GaussianRational>, 9> parse_delta_dump(const Json& j) {
  std::array<PhatMatrix<GaussianRational>, 9> out;
  for (int a = 0; a < 9; ++a) {
    const Json& m = j.at("delta_" + std::to_string(a));
    if (!m.is_array() || m.size() != 12) throw std::invalid_argument("parse_delta_dump: expected 12 rows");
    for (int r = 0; r < 12; ++r) {
      if (!m[r].is_array() || m[r].size() != 12) throw std::invalid_argument("parse_delta_dump: expected 12 columns");
      for (int c = 0; c < 12; ++c) out[a](r, c) = decode_gaussian(m[r][c]);
    }
  }
  return out;
}

}  // namespace finsler3
