#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace splitauth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q" (denominator always present, e.g. "1/1").
std::string to_fraction_string(const Rational& q);

/// Shortest form: "4/9", "1", "0".
std::string to_display_string(const Rational& q);

/// Accepts "p/q" or "p" with optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace splitauth
