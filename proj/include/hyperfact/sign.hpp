#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "hyperfact/errors.hpp"

namespace hyperfact {

/// An element of the sign hyperfield {-1, 0, +1}. The enumerator order is the
/// canonical order used when sorting polynomials.
enum class SignValue : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline constexpr std::array<SignValue, 3> kSignValues = {SignValue::minus, SignValue::zero,
                                                         SignValue::plus};

constexpr int to_int(SignValue s) noexcept { return static_cast<int>(s); }

constexpr SignValue sign_of(long x) noexcept {
  return x > 0 ? SignValue::plus : (x < 0 ? SignValue::minus : SignValue::zero);
}

constexpr SignValue operator*(SignValue a, SignValue b) noexcept {
  return static_cast<SignValue>(to_int(a) * to_int(b));
}

constexpr SignValue operator-(SignValue a) noexcept { return static_cast<SignValue>(-to_int(a)); }

/// a^k; only the parity of k matters for a = ±1, and a^0 = 1.
constexpr SignValue sign_pow(SignValue a, long k) noexcept {
  if (k == 0) return SignValue::plus;
  if (a == SignValue::zero) return SignValue::zero;
  return (k % 2 == 0) ? SignValue::plus : a;
}

inline std::string to_string(SignValue s) { return std::to_string(to_int(s)); }

inline std::ostream& operator<<(std::ostream& os, SignValue s) { return os << to_int(s); }

/// A subset of {-1, 0, +1}, stored as a bitmask.
class SignSubset {
 public:
  constexpr SignSubset() = default;
  constexpr SignSubset(std::initializer_list<SignValue> values) {
    for (SignValue v : values) insert(v);
  }

  static constexpr SignSubset full() {
    return SignSubset{SignValue::minus, SignValue::zero, SignValue::plus};
  }

  constexpr void insert(SignValue v) noexcept { bits_ |= bit(v); }
  constexpr bool contains(SignValue v) const noexcept { return (bits_ & bit(v)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }

  constexpr SignSubset& operator|=(SignSubset other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }

  /// {a·x : x in this set}.
  constexpr SignSubset scaled(SignValue a) const noexcept {
    SignSubset out;
    for (SignValue v : kSignValues)
      if (contains(v)) out.insert(a * v);
    return out;
  }

  friend constexpr bool operator==(SignSubset, SignSubset) = default;

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (SignValue v : kSignValues) {
      if (!contains(v)) continue;
      if (!first) out += ",";
      out += to_string(v);
      first = false;
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, SignSubset s) { return os << s.str(); }

 private:
  static constexpr std::uint8_t bit(SignValue v) noexcept {
    return static_cast<std::uint8_t>(1u << (to_int(v) + 1));
  }

  std::uint8_t bits_ = 0;
};

/// n-ary sign hypersum: {s} when every summand lies in {0, s}, all of 𝕊 when both signs occur.
inline SignSubset sign_hyperadd(std::span<const SignValue> values) {
  if (values.empty()) throw Error(ErrorKind::EmptySum, "sign hypersum of an empty list");
  bool has_plus = false;
  bool has_minus = false;
  for (SignValue v : values) {
    has_plus = has_plus || v == SignValue::plus;
    has_minus = has_minus || v == SignValue::minus;
  }
  if (has_plus && has_minus) return SignSubset::full();
  if (has_plus) return {SignValue::plus};
  if (has_minus) return {SignValue::minus};
  return {SignValue::zero};
}

inline bool sign_contains(SignValue c, std::span<const SignValue> summands) {
  return sign_hyperadd(summands).contains(c);
}

/// Union of a ⊞ d over all d in `set`.
inline SignSubset sign_hyperadd_set(SignValue a, SignSubset set) {
  SignSubset out;
  for (SignValue d : kSignValues) {
    if (!set.contains(d)) continue;
    const SignValue pair[] = {a, d};
    out |= sign_hyperadd(pair);
  }
  return out;
}

}  // namespace hyperfact
