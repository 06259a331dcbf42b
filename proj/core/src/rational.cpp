#include "superpi/errors.hpp"
#include "superpi/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace superpi {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num.push_back(text[i++]);
    ++digits;
  }
  if (digits == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (den.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (i != text.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string ResourceLimitExceeded::format(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

} // namespace superpi
