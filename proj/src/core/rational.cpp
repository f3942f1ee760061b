#include "splitauth/rational.hpp"

#include "splitauth/error.hpp"

#include <cctype>

namespace splitauth {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::string to_display_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return to_fraction_string(q);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) {
    throw ParseError("rational '" + std::string(text) + "' needs a positive denominator");
  }
  return Rational(num, den);
}

}  // namespace splitauth
