#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>

#include "hyperfact/sign.hpp"
#include "hyperfact/tropical.hpp"

namespace hyperfact {

enum class FieldKind { tropical, sign };

constexpr std::string_view to_string(FieldKind kind) noexcept {
  return kind == FieldKind::tropical ? "tropical" : "sign";
}

/// Static description of a hyperfield: its element and subset types, the
/// multiplicative group, the n-ary hyperaddition and a total order used only for
/// canonical sorting.
template <class F>
concept Hyperfield = requires(const typename F::value_type& a,
                              std::span<const typename F::value_type> values,
                              const typename F::subset_type& set) {
  { F::kind } -> std::convertible_to<FieldKind>;
  { F::zero() } -> std::same_as<typename F::value_type>;
  { F::one() } -> std::same_as<typename F::value_type>;
  { F::mul(a, a) } -> std::same_as<typename F::value_type>;
  { F::neg(a) } -> std::same_as<typename F::value_type>;
  { F::inv(a) } -> std::same_as<typename F::value_type>;
  { F::hyperadd(values) } -> std::same_as<typename F::subset_type>;
  { F::contains(a, values) } -> std::same_as<bool>;
  { F::hyperadd_set(a, set) } -> std::same_as<typename F::subset_type>;
  { F::str(a) } -> std::same_as<std::string>;
};

struct TropicalField {
  using value_type = TropValue;
  using subset_type = TropSubset;
  static constexpr FieldKind kind = FieldKind::tropical;

  static TropValue zero() { return TropValue::zero(); }
  static TropValue one() { return TropValue::one(); }
  static bool is_zero(const TropValue& a) { return a.is_zero(); }
  static TropValue mul(const TropValue& a, const TropValue& b) { return a * b; }
  // Every tropical element is its own additive inverse.
  static TropValue neg(const TropValue& a) { return a; }
  static TropValue inv(const TropValue& a) { return a.inverse(); }
  static TropSubset hyperadd(std::span<const TropValue> values) { return trop_hyperadd(values); }
  static bool contains(const TropValue& c, std::span<const TropValue> summands) {
    return trop_contains(c, summands);
  }
  static TropSubset hyperadd_set(const TropValue& a, const TropSubset& set) {
    return trop_hyperadd_set(a, set);
  }
  static std::string str(const TropValue& a) { return a.str(); }
};

struct SignField {
  using value_type = SignValue;
  using subset_type = SignSubset;
  static constexpr FieldKind kind = FieldKind::sign;

  static SignValue zero() { return SignValue::zero; }
  static SignValue one() { return SignValue::plus; }
  static bool is_zero(SignValue a) { return a == SignValue::zero; }
  static SignValue mul(SignValue a, SignValue b) { return a * b; }
  static SignValue neg(SignValue a) { return -a; }
  static SignValue inv(SignValue a) {
    if (a == SignValue::zero) throw Error(ErrorKind::Domain, "sign zero is not invertible");
    return a;
  }
  static SignSubset hyperadd(std::span<const SignValue> values) { return sign_hyperadd(values); }
  static bool contains(SignValue c, std::span<const SignValue> summands) {
    return sign_contains(c, summands);
  }
  static SignSubset hyperadd_set(SignValue a, SignSubset set) { return sign_hyperadd_set(a, set); }
  static std::string str(SignValue a) { return to_string(a); }
};

static_assert(Hyperfield<TropicalField>);
static_assert(Hyperfield<SignField>);

}  // namespace hyperfact
