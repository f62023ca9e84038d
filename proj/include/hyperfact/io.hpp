#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperfact/polynomial.hpp"

namespace hyperfact {

using Json = nlohmann::ordered_json;

// Text syntax
// -----------
// A polynomial is a sum of terms "c:T^k", "c:T", "c" or a bare monomial "T^k".
// Over 𝕋 the coefficient is "zero" or a rational log coordinate and terms are
// joined by "+"; a bare monomial has coefficient 0 (the multiplicative unit).
// Over 𝕊 terms are joined by "+" or "-", so "T^2 - T + 1" is accepted.
// A JSON array "[c0, c1, ...]" of coefficients in ascending order is accepted too.

template <Hyperfield F>
std::string format_coefficient(const typename F::value_type& c) {
  return F::str(c);
}

/// Canonical text: terms by descending power, no spaces.
template <Hyperfield F>
std::string format_polynomial(const Polynomial<F>& p) {
  const auto& c = p.coeffs();
  auto monomial = [](std::size_t k) -> std::string {
    if (k == 0) return "";
    return k == 1 ? "T" : "T^" + std::to_string(k);
  };
  std::string out;
  if constexpr (F::kind == FieldKind::sign) {
    if (p.is_zero()) return "0";
    for (std::size_t k = c.size(); k-- > 0;) {
      if (c[k] == SignValue::zero) continue;
      if (c[k] == SignValue::minus)
        out += "-";
      else if (!out.empty())
        out += "+";
      out += k == 0 ? std::string("1") : monomial(k);
    }
  } else {
    if (p.is_zero()) return "zero";
    for (std::size_t k = c.size(); k-- > 0;) {
      if (c[k].is_zero()) continue;
      if (!out.empty()) out += "+";
      if (k == 0)
        out += c[k].str();
      else if (c[k] == TropValue::one())
        out += monomial(k);
      else
        out += c[k].str() + ":" + monomial(k);
    }
  }
  return out;
}

template <Hyperfield F>
Json coefficient_to_json(const typename F::value_type& c) {
  if constexpr (F::kind == FieldKind::sign) {
    return to_int(c);
  } else {
    return c.str();
  }
}

/// {"field": "tropical"|"sign", "coeffs": [c0, ..., cn]}.
template <Hyperfield F>
Json to_json(const Polynomial<F>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coefficient_to_json<F>(c));
  Json out;
  out["field"] = std::string(to_string(F::kind));
  out["coeffs"] = std::move(coeffs);
  return out;
}

namespace detail {

template <Hyperfield F>
typename F::value_type coefficient_from_json(const Json& j, std::size_t column) {
  if constexpr (F::kind == FieldKind::sign) {
    if (!j.is_number_integer()) throw ParseError(column, "sign coefficients must be -1, 0 or 1");
    const auto v = j.get<long long>();
    if (v < -1 || v > 1)
      throw ParseError(column, "coefficient " + std::to_string(v) + " is not an element of the sign hyperfield");
    return sign_of(static_cast<long>(v));
  } else {
    if (j.is_string()) return TropValue::parse(j.get<std::string>());
    if (j.is_number_integer()) return TropValue::log(Rational(j.get<long long>()));
    throw ParseError(column, "tropical coefficients must be integers, \"p/q\" strings or \"zero\"");
  }
}

template <Hyperfield F>
Polynomial<F> parse_coefficient_array(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed coefficient array");
  }
  if (!j.is_array()) throw ParseError(1, "expected a JSON array of coefficients");
  std::vector<typename F::value_type> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(coefficient_from_json<F>(j[i], 1));
  return Polynomial<F>(std::move(coeffs));
}

template <Hyperfield F>
class TermParser {
 public:
  using V = typename F::value_type;

  explicit TermParser(std::string_view text) : text_(text) {}

  Polynomial<F> parse() {
    std::map<std::size_t, V> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      bool negate = false;
      if constexpr (F::kind == FieldKind::sign) {
        if (peek() == '+' || peek() == '-') {
          negate = peek() == '-';
          ++pos_;
        } else if (!first) {
          fail("expected '+' or '-'");
        }
      } else {
        if (!first) {
          if (peek() != '+') fail("expected '+'");
          ++pos_;
        }
      }
      skip_space();
      const std::size_t term_column = pos_ + 1;
      auto [power, value] = term();
      if constexpr (F::kind == FieldKind::sign) {
        if (negate) value = -value;
      }
      if (!terms.emplace(power, value).second)
        throw ParseError(term_column, "repeated power T^" + std::to_string(power));
      first = false;
      skip_space();
      if (at_end()) break;
    }
    std::vector<V> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, F::zero());
    for (const auto& [k, v] : terms) coeffs[k] = v;
    return Polynomial<F>(std::move(coeffs));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<std::size_t, V> term() {
    if (peek() == 'T') return {monomial(), F::one()};
    V c = coefficient();
    skip_space();
    if (peek() == ':' || peek() == '*') {
      ++pos_;
      skip_space();
      if (peek() != 'T') fail("expected 'T' after ':'");
      return {monomial(), c};
    }
    return {0, c};
  }

  std::size_t monomial() {
    ++pos_;  // 'T'
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an exponent after '^'");
    if (pos_ - start > 6) throw ParseError(start + 1, "exponent too large");
    return static_cast<std::size_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  V coefficient() {
    const std::size_t start = pos_;
    if constexpr (F::kind == FieldKind::tropical) {
      if (text_.substr(pos_, 4) == "zero") {
        pos_ += 4;
        return TropValue::zero();
      }
      if (peek() == '-') ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected a coefficient");
      try {
        return TropValue::log(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const ParseError& e) {
        throw ParseError(start + e.column(), "malformed rational coefficient");
      }
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected a coefficient");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 1 || digits[0] > '1')
        throw ParseError(start + 1, "coefficient " + digits + " is not an element of the sign hyperfield");
      return digits == "1" ? SignValue::plus : SignValue::zero;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Hyperfield F>
Polynomial<F> parse_polynomial(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') return detail::parse_coefficient_array<F>(text);
  return detail::TermParser<F>(text).parse();
}

template <Hyperfield F>
Polynomial<F> polynomial_from_json(const Json& j) {
  const Json& coeffs = j.is_object() ? j.at("coeffs") : j;
  if (!coeffs.is_array()) throw ParseError(1, "expected a coefficient array");
  std::vector<typename F::value_type> out;
  for (const Json& c : coeffs) out.push_back(detail::coefficient_from_json<F>(c, 1));
  return Polynomial<F>(std::move(out));
}

}  // namespace hyperfact
