#include "arithmat/integer.hpp"

#include <stdexcept>

namespace arithmat {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += b;
  return r;
}

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  Integer value(std::string(text.substr(pos)));
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace arithmat
