#include "finsler3/core_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace finsler3 {
namespace {

struct PackedTable {
  std::array<int, 729> index{};
  PackedTable() {
    index.fill(-1);
    int next = 0;
    for (int a = 0; a < 9; ++a)
      for (int b = a; b < 9; ++b)
        for (int c = b; c < 9; ++c) index[(a * 9 + b) * 9 + c] = next++;
  }
};

const PackedTable& packed_table() {
  static const PackedTable table;
  return table;
}

Rational det_of(const NineVector<Rational>& x) {
  return real(herm_from_components(x).determinant());
}

NineVector<Rational> unit_sum(std::initializer_list<int> idx) {
  NineVector<Rational> v = NineVector<Rational>::Zero();
  for (int i : idx) v(i) += 1;
  return v;
}

}  // namespace

int CubicTensor::packed_index(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return packed_table().index[(a * 9 + b) * 9 + c];
}

CubicTensor::CubicTensor() {
  // Polarization identity for a cubic form f:
  // 6 G(x,y,z) = f(x+y+z) - f(x+y) - f(x+z) - f(y+z) + f(x) + f(y) + f(z).
  for (int a = 0; a < kDim; ++a)
    for (int b = a; b < kDim; ++b)
      for (int c = b; c < kDim; ++c) {
        Rational six_g = det_of(unit_sum({a, b, c})) - det_of(unit_sum({a, b})) -
                         det_of(unit_sum({a, c})) - det_of(unit_sum({b, c})) + det_of(unit_sum({a})) +
                         det_of(unit_sum({b})) + det_of(unit_sum({c}));
        Rational g = six_g / 6;
        const int multiplicity = (a == b && b == c) ? 1 : (a == b || b == c) ? 3 : 6;
        if (!g.is_zero()) terms_.push_back({a, b, c, multiplicity, g});
        packed_[packed_index(a, b, c)] = std::move(g);
      }
}

const Rational& CubicTensor::operator()(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a >= kDim || b >= kDim || c >= kDim)
    throw std::out_of_range("CubicTensor: index out of range");
  return packed_[packed_index(a, b, c)];
}

const CubicTensor& cubic_tensor() {
  static const CubicTensor tensor;
  return tensor;
}

namespace {

// Decimal integer text to mpz; leading zeros would otherwise select octal.
boost::multiprecision::mpz_int decimal_integer(std::string s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  const auto first = s.find_first_not_of('0');
  s = first == std::string::npos ? "0" : s.substr(first);
  boost::multiprecision::mpz_int v(s);
  return negative ? boost::multiprecision::mpz_int(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text.empty()) throw std::invalid_argument("parse_rational: empty input");

  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    auto is_integer = [](const std::string& s) {
      std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      return s.size() > start &&
             std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    if (!is_integer(num) || !is_integer(den)) throw std::invalid_argument("parse_rational: malformed fraction '" + raw + "'");
    const Rational q(decimal_integer(num));
    const Rational d(decimal_integer(den));
    if (d.is_zero()) throw std::invalid_argument("parse_rational: zero denominator");
    return q / d;
  }

  // Decimal literal with optional exponent, converted digit by digit.
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      any_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("parse_rational: malformed number '" + raw + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw std::invalid_argument("parse_rational: malformed number '" + raw + "'");
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(text.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_rational: malformed exponent in '" + raw + "'");
    }
    if (pos + 1 + used != text.size()) throw std::invalid_argument("parse_rational: trailing characters in '" + raw + "'");
    scale += exponent;
  }
  Rational value{decimal_integer(digits)};
  Rational ten(10);
  for (long k = 0; k < std::abs(scale); ++k) value = scale > 0 ? value * ten : value / ten;
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

}  // namespace finsler3
