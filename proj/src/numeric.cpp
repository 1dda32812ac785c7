#include "stsurf/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace stsurf {

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  if (pos == text.size()) throw std::invalid_argument("cannot parse rational '" + whole + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("cannot parse rational '" + whole + "'");
    }
  }
  Integer value(text.substr(pos));
  return negative ? Integer(-value) : value;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, text));
  const Integer num = parse_integer(trim(t.substr(0, slash)), text);
  const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

}  // namespace stsurf
