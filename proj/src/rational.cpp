#include "g2cal/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace g2cal {

std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(Integer(std::string(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Integer d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(Integer(std::string(num)), d);
  } catch (...) {
    return std::nullopt;
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = numerator(q), d = denominator(q);
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace g2cal
