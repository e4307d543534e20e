#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace g2cal {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// Formats as "p" or "p/q" with q > 0.
std::string rational_str(const Rational& q);

/// Parses "p", "-p", "p/q". Whitespace is not accepted.
std::optional<Rational> parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Exact square root, if the argument is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace g2cal
