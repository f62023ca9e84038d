#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "hyperfact/errors.hpp"
#include "hyperfact/rational.hpp"

namespace hyperfact {

/// An element of the tropical hyperfield, stored in logarithmic coordinates.
///
/// The multiplicative model is the set of non-negative reals. `TropValue::log(e)`
/// denotes the real number exp(e); the base of the logarithm is irrelevant because
/// every operation is invariant under rescaling all exponents. `TropValue::zero()`
/// is the real number 0 and sits below every `log(e)` in the order.
class TropValue {
 public:
  TropValue() = default;

  static TropValue zero() { return TropValue(); }
  static TropValue one() { return log(Rational(0)); }
  static TropValue log(Rational exponent) {
    TropValue v;
    v.zero_ = false;
    v.exponent_ = std::move(exponent);
    return v;
  }
  static TropValue log(long exponent) { return log(Rational(exponent)); }

  bool is_zero() const noexcept { return zero_; }

  /// Log coordinate of a nonzero value.
  const Rational& exponent() const {
    if (zero_) throw Error(ErrorKind::Domain, "tropical zero has no finite exponent");
    return exponent_;
  }

  TropValue inverse() const {
    if (zero_) throw Error(ErrorKind::Domain, "tropical zero is not invertible");
    return log(Rational(-exponent_));
  }

  friend TropValue operator*(const TropValue& a, const TropValue& b) {
    if (a.zero_ || b.zero_) return zero();
    return log(Rational(a.exponent_ + b.exponent_));
  }

  friend TropValue operator/(const TropValue& a, const TropValue& b) { return a * b.inverse(); }

  /// a^k for integer k (negative k requires a nonzero; a^0 = 1 even for a = 0).
  friend TropValue pow(const TropValue& a, long k) {
    if (k == 0) return one();
    if (a.zero_) {
      if (k < 0) throw Error(ErrorKind::Domain, "tropical zero is not invertible");
      return zero();
    }
    return log(Rational(a.exponent_ * k));
  }

  friend bool operator==(const TropValue& a, const TropValue& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.exponent_ == b.exponent_;
  }

  friend std::strong_ordering operator<=>(const TropValue& a, const TropValue& b) {
    if (a.zero_ || b.zero_) {
      if (a.zero_ && b.zero_) return std::strong_ordering::equal;
      return a.zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.exponent_ < b.exponent_) return std::strong_ordering::less;
    if (b.exponent_ < a.exponent_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "zero" or the rational log coordinate, e.g. "-3/2".
  std::string str() const { return zero_ ? std::string("zero") : to_string(exponent_); }

  static TropValue parse(std::string_view text) {
    if (text == "zero") return zero();
    return log(parse_rational(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const TropValue& v) { return os << v.str(); }

 private:
  bool zero_ = true;
  Rational exponent_;
};

/// Result of a tropical hypersum: a singleton {v} or the closed interval [0, top].
class TropSubset {
 public:
  static TropSubset singleton(TropValue v) { return TropSubset(false, std::move(v)); }
  static TropSubset interval(TropValue top) { return TropSubset(true, std::move(top)); }

  /// Largest element of the set.
  const TropValue& top() const noexcept { return top_; }

  /// True when the set has exactly one element; {0} counts as a singleton.
  bool is_singleton() const noexcept { return !interval_ || top_.is_zero(); }

  bool contains(const TropValue& v) const { return interval_ ? v <= top_ : v == top_; }

  /// {a·x : x in this set}.
  TropSubset scaled(const TropValue& a) const {
    if (a.is_zero()) return singleton(TropValue::zero());
    return TropSubset(interval_, a * top_);
  }

  friend bool operator==(const TropSubset& a, const TropSubset& b) {
    return a.is_singleton() == b.is_singleton() && a.top_ == b.top_;
  }

  std::string str() const {
    return is_singleton() ? "{" + top_.str() + "}" : "[zero, " + top_.str() + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const TropSubset& s) { return os << s.str(); }

 private:
  TropSubset(bool interval, TropValue top) : interval_(interval), top_(std::move(top)) {}

  bool interval_ = false;
  TropValue top_;
};

/// n-ary tropical hypersum: {max} if the maximum is attained once, [0, max] otherwise.
inline TropSubset trop_hyperadd(std::span<const TropValue> values) {
  if (values.empty()) throw Error(ErrorKind::EmptySum, "tropical hypersum of an empty list");
  const TropValue* best = &values.front();
  std::size_t count = 1;
  for (const TropValue& v : values.subspan(1)) {
    if (*best < v) {
      best = &v;
      count = 1;
    } else if (v == *best) {
      ++count;
    }
  }
  return count > 1 ? TropSubset::interval(*best) : TropSubset::singleton(*best);
}

/// c belongs to the hypersum iff the maximum of {c} and the summands occurs at least twice.
inline bool trop_contains(const TropValue& c, std::span<const TropValue> summands) {
  if (summands.empty()) throw Error(ErrorKind::EmptySum, "tropical hypersum of an empty list");
  TropValue best = c;
  std::size_t count = 1;
  for (const TropValue& v : summands) {
    if (best < v) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  return count > 1;
}

/// Union of a ⊞ d over all d in `set`.
inline TropSubset trop_hyperadd_set(const TropValue& a, const TropSubset& set) {
  if (set.is_singleton()) {
    const TropValue pair[] = {a, set.top()};
    return trop_hyperadd(pair);
  }
  const TropValue& x = set.top();
  if (a.is_zero() || a < x) return TropSubset::interval(x);
  if (a == x) return TropSubset::interval(a);
  return TropSubset::singleton(a);
}

}  // namespace hyperfact
