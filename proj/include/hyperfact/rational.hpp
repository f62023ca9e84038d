#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "hyperfact/errors.hpp"

namespace hyperfact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise; q > 0 and gcd(p, q) = 1.
inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Accepts an optional sign, digits, and an optional "/digits" denominator.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](std::size_t col, const char* why) -> Rational {
    throw ParseError(col, std::string(why) + " in rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) return fail(pos + 1, "expected digits");
  Integer num(std::string(text.substr(pos, num_end - pos)));
  Integer den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_end = digits(pos);
    if (den_end == pos) return fail(pos + 1, "expected denominator digits");
    den = Integer(std::string(text.substr(pos, den_end - pos)));
    if (den == 0) return fail(pos + 1, "zero denominator");
    pos = den_end;
  }
  if (pos != text.size()) return fail(pos + 1, "trailing characters");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace hyperfact
