#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfact/io.hpp"
#include "hyperfact/product.hpp"

namespace hyperfact {

/// Polynomial over ℚ, coefficients c_0 .. c_n with c_n nonzero.
using RationalPoly = std::vector<Rational>;

/// Laurent polynomial in t over ℚ: exponent -> nonzero coefficient.
using LaurentPoly = std::map<int, Rational>;

/// Polynomial in T whose coefficients are Laurent polynomials in t.
using LaurentCoeffPoly = std::vector<LaurentPoly>;

inline void add_to(LaurentPoly& acc, const LaurentPoly& x) {
  for (const auto& [e, c] : x) {
    Rational& slot = acc[e];
    slot += c;
    if (slot == 0) acc.erase(e);
  }
}

inline LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) add_to(out, LaurentPoly{{ex + ey, cx * cy}});
  return out;
}

inline LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) {
  add_to(x, y);
  return x;
}

namespace detail {

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const LaurentPoly& c) { return c.empty(); }
inline void accumulate(Rational& acc, const Rational& x) { acc += x; }
inline void accumulate(LaurentPoly& acc, const LaurentPoly& x) { add_to(acc, x); }

template <class C>
std::vector<C> multiply(const std::vector<C>& p, const std::vector<C>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<C> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) accumulate(out[i + j], p[i] * q[j]);
  while (!out.empty() && is_zero_coeff(out.back())) out.pop_back();
  return out;
}

}  // namespace detail

inline RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) { return detail::multiply(p, q); }
inline LaurentCoeffPoly operator*(const LaurentCoeffPoly& p, const LaurentCoeffPoly& q) {
  return detail::multiply(p, q);
}

/// The sign map ℚ -> 𝕊.
inline SignValue sign_map(const Rational& x) { return x > 0 ? SignValue::plus : (x < 0 ? SignValue::minus : SignValue::zero); }

/// Lowest exponent with a nonzero coefficient; f must be nonzero.
inline int t_order(const LaurentPoly& f) {
  if (f.empty()) throw Error(ErrorKind::Domain, "the zero Laurent polynomial has no order");
  return f.begin()->first;
}

/// The valuation exp(-ord_t f) into 𝕋, i.e. Log(-ord_t f); zero for f = 0.
inline TropValue t_adic_valuation(const LaurentPoly& f) {
  if (f.empty()) return TropValue::zero();
  return TropValue::log(static_cast<long>(-t_order(f)));
}

inline SignPoly push_sign(const RationalPoly& p) {
  return pushforward<SignField>(p, [](const Rational& c) { return sign_map(c); }).image;
}

inline TropPoly push_valuation(const LaurentCoeffPoly& p) {
  return pushforward<TropicalField>(p, [](const LaurentPoly& c) { return t_adic_valuation(c); }).image;
}

inline std::string format_rational_poly(const RationalPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + to_string(p[i]);
  return out + "]";
}

inline std::string format_laurent(const LaurentPoly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : f) {
    if (!out.empty()) out += "+";
    out += to_string(c) + "t^" + std::to_string(e);
  }
  return out;
}

inline std::string format_laurent_poly(const LaurentCoeffPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + format_laurent(p[i]);
  return out + "]";
}

enum class Morphism { sign, valuation };

constexpr std::string_view to_string(Morphism m) noexcept {
  return m == Morphism::sign ? "sign" : "valuation";
}

/// Random sources for the oracle: rationals with numerators in [-9, 9] and
/// denominators in [1, 4], Laurent polynomials with one to three terms of
/// exponent in [-3, 3].
class MorphismSampler {
 public:
  explicit MorphismSampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(bool nonzero = false) {
    long num = 0;
    do {
      num = uniform(-9, 9);
    } while (nonzero && num == 0);
    return Rational(num) / Rational(uniform(1, 4));
  }

  LaurentPoly laurent(bool nonzero = false) {
    LaurentPoly f;
    do {
      f.clear();
      const long terms = uniform(0, 3);
      for (long t = 0; t < terms; ++t) add_to(f, LaurentPoly{{static_cast<int>(uniform(-3, 3)), rational(true)}});
    } while (nonzero && f.empty());
    return f;
  }

  RationalPoly rational_poly(std::size_t degree) {
    RationalPoly p;
    for (std::size_t i = 0; i < degree; ++i) p.push_back(rational());
    p.push_back(rational(true));
    return p;
  }

  LaurentCoeffPoly laurent_poly(std::size_t degree) {
    LaurentCoeffPoly p;
    for (std::size_t i = 0; i < degree; ++i) p.push_back(laurent());
    p.push_back(laurent(true));
    return p;
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

struct MorphismLawReport {
  Morphism morphism = Morphism::sign;
  std::size_t samples = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

struct RationalDomain {
  using value_type = Rational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational neg(const Rational& x) { return -x; }
  static Rational draw(MorphismSampler& s) { return s.rational(); }
  static SignValue image(const Rational& x) { return sign_map(x); }
  static bool contains(SignValue c, std::span<const SignValue> xs) { return sign_contains(c, xs); }
  static std::string show(const Rational& x) { return to_string(x); }
};

struct LaurentDomain {
  using value_type = LaurentPoly;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return {{0, Rational(1)}}; }
  static LaurentPoly neg(const LaurentPoly& x) { return x * LaurentPoly{{0, Rational(-1)}}; }
  static LaurentPoly draw(MorphismSampler& s) { return s.laurent(); }
  static TropValue image(const LaurentPoly& x) { return t_adic_valuation(x); }
  static bool contains(const TropValue& c, std::span<const TropValue> xs) { return trop_contains(c, xs); }
  static std::string show(const LaurentPoly& x) { return format_laurent(x); }
};

template <class D>
void check_laws(MorphismLawReport& report, MorphismSampler& sampler) {
  using Image = decltype(D::image(D::zero()));
  auto fail = [&](std::string what) {
    if (report.failures.size() < 8) report.failures.push_back(std::move(what));
  };
  if (!(D::image(D::zero()) == Image{})) fail("f(0) is not zero");
  if (!(D::image(D::one()) == D::image(D::one()) * D::image(D::one())) ||
      D::image(D::one()) == Image{})
    fail("f(1) is not one");
  for (std::size_t s = 0; s < report.samples; ++s) {
    const auto a = D::draw(sampler);
    const auto b = D::draw(sampler);
    if (!(D::image(a * b) == D::image(a) * D::image(b)))
      fail("f(ab) != f(a)f(b) for a=" + D::show(a) + ", b=" + D::show(b));

    std::vector<typename D::value_type> terms;
    const long count = sampler.uniform(2, 4);
    for (long t = 0; t < count; ++t) terms.push_back(D::draw(sampler));
    if (s % 2 == 0) {
      // Cancelling sums exercise 0 ∈ f(a_1) ⊞ ... ⊞ f(a_n).
      auto partial = D::zero();
      for (std::size_t t = 0; t + 1 < terms.size(); ++t) partial = partial + terms[t];
      terms.back() = D::neg(partial);
    }
    auto total = D::zero();
    std::vector<Image> images;
    for (const auto& t : terms) {
      total = total + t;
      images.push_back(D::image(t));
    }
    if (!D::contains(D::image(total), images))
      fail("f(sum) outside the hypersum of the images, sum " + D::show(total));
  }
}

}  // namespace detail

/// f(0) = 0, f(1) = 1, f(ab) = f(a)f(b), and f(a_1 + ... + a_n) ∈ f(a_1) ⊞ ... ⊞ f(a_n)
/// on random samples; every other sum is forced to cancel.
inline MorphismLawReport check_morphism_laws(Morphism m, std::size_t samples, std::uint64_t seed = 20190725) {
  MorphismLawReport report{m, samples, {}};
  MorphismSampler sampler(seed);
  if (m == Morphism::sign)
    detail::check_laws<detail::RationalDomain>(report, sampler);
  else
    detail::check_laws<detail::LaurentDomain>(report, sampler);
  return report;
}

struct PushforwardFailure {
  std::vector<std::string> factors;
  std::string product;
  std::string image_check;
};

struct PushforwardReport {
  Morphism morphism = Morphism::sign;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PushforwardFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// For random factorizations p = q_1 ··· q_m over the source field (2 to 4
/// factors of degree 1 to 4), checks f(p) ∈ f(q_1) ⊡ ... ⊡ f(q_m).
inline PushforwardReport check_pushforward_lemma(std::size_t trials, std::uint64_t seed,
                                                 Morphism m = Morphism::sign) {
  PushforwardReport report{m, trials, seed, {}};
  MorphismSampler sampler(seed);
  auto run = [&](auto draw, auto push, auto show) {
    for (std::size_t t = 0; t < trials; ++t) {
      const long count = sampler.uniform(2, 4);
      std::vector<decltype(draw(1))> factors;
      for (long j = 0; j < count; ++j) factors.push_back(draw(static_cast<std::size_t>(sampler.uniform(1, 4))));
      auto product = factors[0];
      for (std::size_t j = 1; j < factors.size(); ++j) product = product * factors[j];
      using Image = decltype(push(product));
      std::vector<Image> images;
      for (const auto& q : factors) images.push_back(push(q));
      const Image image = push(product);
      if (in_product(image, std::span<const Image>(images))) continue;
      PushforwardFailure failure;
      for (const auto& q : factors) failure.factors.push_back(show(q));
      failure.product = show(product);
      failure.image_check = format_polynomial(image) + " not in the product of";
      for (const Image& q : images) failure.image_check += " " + format_polynomial(q);
      report.failures.push_back(std::move(failure));
    }
  };
  if (m == Morphism::sign)
    run([&](std::size_t d) { return sampler.rational_poly(d); }, push_sign, format_rational_poly);
  else
    run([&](std::size_t d) { return sampler.laurent_poly(d); }, push_valuation, format_laurent_poly);
  return report;
}

inline Json to_json(const PushforwardReport& r) {
  Json failures = Json::array();
  for (const PushforwardFailure& f : r.failures) {
    Json entry;
    entry["factors"] = f.factors;
    entry["product"] = f.product;
    entry["image_check"] = f.image_check;
    failures.push_back(std::move(entry));
  }
  Json out;
  out["morphism"] = std::string(to_string(r.morphism));
  out["trials"] = r.trials;
  out["failures"] = std::move(failures);
  out["seed"] = r.seed;
  return out;
}

/// Two real factorizations whose sign images collide:
/// (T+1)(T^2+1) and (T+1)^3 both map to T^3+T^2+T+1.
struct NonuniquenessReport {
  SignPoly image_first;
  SignPoly image_second;
  std::vector<SignPoly> factors_first;
  std::vector<SignPoly> factors_second;
  bool first_in_product = false;
  bool second_in_product = false;

  bool images_equal() const { return image_first == image_second; }
  bool multisets_differ() const { return factors_first != factors_second; }
  bool passed() const { return images_equal() && multisets_differ() && first_in_product && second_in_product; }
};

inline NonuniquenessReport nonuniqueness_witness() {
  const RationalPoly t_plus_1{1, 1};
  const RationalPoly t2_plus_1{1, 0, 1};
  const std::vector<RationalPoly> first{t_plus_1, t2_plus_1};
  const std::vector<RationalPoly> second{t_plus_1, t_plus_1, t_plus_1};
  NonuniquenessReport r;
  auto image_of = [](const std::vector<RationalPoly>& factors, std::vector<SignPoly>& pushed) {
    RationalPoly product{1};
    for (const RationalPoly& q : factors) {
      product = product * q;
      pushed.push_back(push_sign(q));
    }
    std::sort(pushed.begin(), pushed.end(), degree_then_canonical<SignField>);
    return push_sign(product);
  };
  r.image_first = image_of(first, r.factors_first);
  r.image_second = image_of(second, r.factors_second);
  r.first_in_product = in_product(r.image_first, std::span<const SignPoly>(r.factors_first));
  r.second_in_product = in_product(r.image_second, std::span<const SignPoly>(r.factors_second));
  return r;
}

inline Json to_json(const NonuniquenessReport& r) {
  auto list = [](const std::vector<SignPoly>& ps) {
    Json out = Json::array();
    for (const SignPoly& p : ps) out.push_back(format_polynomial(p));
    return out;
  };
  Json out;
  out["images"] = Json::array({format_polynomial(r.image_first), format_polynomial(r.image_second)});
  out["factorizations"] = Json::array({list(r.factors_first), list(r.factors_second)});
  out["images_equal"] = r.images_equal();
  out["multisets_differ"] = r.multisets_differ();
  out["memberships"] = Json::array({r.first_in_product, r.second_in_product});
  out["passed"] = r.passed();
  return out;
}

}  // namespace hyperfact
