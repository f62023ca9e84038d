#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperfact/hyperfield.hpp"

namespace hyperfact {

/// Outcome of checking one hyperfield law over a family of instances.
struct LawResult {
  std::string law;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // at most kMaxRecorded entries

  static constexpr std::size_t kMaxRecorded = 8;

  bool passed() const noexcept { return failures == 0; }
};

struct AxiomReport {
  FieldKind field = FieldKind::sign;
  std::size_t triples = 0;
  std::vector<LawResult> laws;

  bool passed() const noexcept {
    for (const LawResult& law : laws)
      if (!law.passed()) return false;
    return true;
  }

  std::size_t failure_count() const noexcept {
    std::size_t n = 0;
    for (const LawResult& law : laws) n += law.failures;
    return n;
  }
};

namespace detail {

template <Hyperfield F>
typename F::subset_type singleton_set(const typename F::value_type& a) {
  if constexpr (F::kind == FieldKind::tropical) {
    return TropSubset::singleton(a);
  } else {
    return SignSubset{a};
  }
}

template <Hyperfield F>
bool nonempty(const typename F::subset_type& s) {
  if constexpr (F::kind == FieldKind::tropical) {
    return s.contains(s.top());
  } else {
    return !s.empty();
  }
}

template <Hyperfield F>
typename F::subset_type add2(const typename F::value_type& a, const typename F::value_type& b) {
  const typename F::value_type pair[] = {a, b};
  return F::hyperadd(pair);
}

template <Hyperfield F>
bool contains2(const typename F::value_type& c, const typename F::value_type& a,
               const typename F::value_type& b) {
  const typename F::value_type pair[] = {a, b};
  return F::contains(c, pair);
}

template <Hyperfield F>
typename F::subset_type left_fold(std::span<const typename F::value_type> values) {
  auto acc = singleton_set<F>(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) acc = F::hyperadd_set(values[i], acc);
  return acc;
}

template <Hyperfield F>
typename F::subset_type right_fold(std::span<const typename F::value_type> values) {
  auto acc = singleton_set<F>(values.back());
  for (std::size_t i = values.size() - 1; i-- > 0;) acc = F::hyperadd_set(values[i], acc);
  return acc;
}

class LawBook {
 public:
  LawResult& law(const std::string& name) {
    for (LawResult& l : laws_)
      if (l.law == name) return l;
    laws_.push_back(LawResult{name, 0, 0, {}});
    return laws_.back();
  }

  void record(const std::string& name, bool ok, const std::function<std::string()>& describe) {
    LawResult& l = law(name);
    ++l.instances;
    if (ok) return;
    ++l.failures;
    if (l.counterexamples.size() < LawResult::kMaxRecorded) l.counterexamples.push_back(describe());
  }

  std::vector<LawResult> take() { return std::move(laws_); }

 private:
  std::vector<LawResult> laws_;
};

/// Checks every law on the triple (a, b, c).
template <Hyperfield F>
void check_triple(LawBook& book, const typename F::value_type& a, const typename F::value_type& b,
                  const typename F::value_type& c) {
  using V = typename F::value_type;
  auto show = [&] {
    return "a=" + F::str(a) + ", b=" + F::str(b) + ", c=" + F::str(c);
  };
  const V zero = F::zero();
  const V one = F::one();

  // HF1: (F, ·, 1) commutative monoid, F minus {0} a group, 0 absorbing.
  book.record("HF1 multiplicative monoid",
              F::mul(a, b) == F::mul(b, a) && F::mul(F::mul(a, b), c) == F::mul(a, F::mul(b, c)) &&
                  F::mul(a, one) == a && F::mul(zero, a) == zero,
              show);
  if (!(a == zero)) book.record("HF1 inverses", F::mul(a, F::inv(a)) == one, show);

  // HF2: a·(b ⊞ c) = a·b ⊞ a·c.
  book.record("HF2 distributive", add2<F>(b, c).scaled(a) == add2<F>(F::mul(a, b), F::mul(a, c)),
              show);

  book.record("HG1 non-empty sums", nonempty<F>(add2<F>(a, b)), show);
  book.record("HG2 commutative", add2<F>(a, b) == add2<F>(b, a), show);
  book.record("HG3 neutral element", add2<F>(a, zero) == singleton_set<F>(a), show);

  // HG4: 0 ∈ a ⊞ d exactly for d = -a, probed on every element of the triple and on -a.
  bool inverse_ok = contains2<F>(zero, a, F::neg(a));
  for (const V& d : {a, b, c}) inverse_ok = inverse_ok && (contains2<F>(zero, a, d) == (d == F::neg(a)));
  book.record("HG4 unique additive inverse", inverse_ok, show);

  // HG5: ⋃{a ⊞ d | d ∈ b ⊞ c} = ⋃{d ⊞ c | d ∈ a ⊞ b}.
  book.record("HG5 associative", F::hyperadd_set(a, add2<F>(b, c)) == F::hyperadd_set(c, add2<F>(a, b)),
              show);

  // HG6: a ∈ b ⊞ c  <=>  -b ∈ (-a) ⊞ c.
  book.record("HG6 reversibility",
              contains2<F>(a, b, c) == contains2<F>(F::neg(b), F::neg(a), c), show);

  // The closed n-ary rule agrees with both binary folds.
  const V triple[] = {a, b, c};
  const auto closed = F::hyperadd(triple);
  book.record("n-ary sum equals folds", closed == left_fold<F>(triple) && closed == right_fold<F>(triple),
              show);

  if constexpr (F::kind == FieldKind::tropical) {
    book.record("tropical self-inverse", F::neg(a) == a && contains2<F>(zero, a, a), show);
  }
}

}  // namespace detail

/// Exhaustive check of all hyperfield laws over all 27 triples of 𝕊, plus the
/// n-ary rule on all 81 quadruples.
inline AxiomReport check_sign_axioms() {
  detail::LawBook book;
  AxiomReport report;
  report.field = FieldKind::sign;
  for (SignValue a : kSignValues)
    for (SignValue b : kSignValues)
      for (SignValue c : kSignValues) {
        detail::check_triple<SignField>(book, a, b, c);
        ++report.triples;
        for (SignValue d : kSignValues) {
          const SignValue quad[] = {a, b, c, d};
          const SignSubset closed = sign_hyperadd(quad);
          book.record("n-ary sum equals folds (4 terms)",
                      closed == detail::left_fold<SignField>(quad) &&
                          closed == detail::right_fold<SignField>(quad),
                      [&] {
                        return "a=" + to_string(a) + ", b=" + to_string(b) + ", c=" + to_string(c) +
                               ", d=" + to_string(d);
                      });
        }
      }
  report.laws = book.take();
  return report;
}

/// Random tropical value with exponent p/q, q in [1, 16], |p/q| <= 4. Roughly one
/// draw in eight is zero.
inline TropValue random_trop_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> zero_roll(0, 7);
  if (zero_roll(rng) == 0) return TropValue::zero();
  std::uniform_int_distribution<long> den_dist(1, 16);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-4 * den, 4 * den);
  return TropValue::log(Rational(num_dist(rng), den));
}

/// Sampled check of the hyperfield laws on 𝕋: hand-picked degenerate triples
/// (zeros, equal values) followed by `sample_budget` random triples, a third of
/// which reuse an earlier coordinate to force ties.
inline AxiomReport check_tropical_axioms(std::size_t sample_budget, std::uint64_t seed = 20190725) {
  detail::LawBook book;
  AxiomReport report;
  report.field = FieldKind::tropical;

  const TropValue z = TropValue::zero();
  const TropValue one = TropValue::one();
  const TropValue two = TropValue::log(2);
  const TropValue half = TropValue::log(Rational(-1, 2));
  const std::array<TropValue, 4> pool = {z, one, two, half};
  for (const TropValue& a : pool)
    for (const TropValue& b : pool)
      for (const TropValue& c : pool) {
        detail::check_triple<TropicalField>(book, a, b, c);
        ++report.triples;
      }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> tie_roll(0, 5);
  for (std::size_t i = 0; i < sample_budget; ++i) {
    TropValue a = random_trop_value(rng);
    TropValue b = random_trop_value(rng);
    TropValue c = random_trop_value(rng);
    switch (tie_roll(rng)) {
      case 0: b = a; break;
      case 1: c = a; break;
      default: break;
    }
    detail::check_triple<TropicalField>(book, a, b, c);
    ++report.triples;
  }
  report.laws = book.take();
  return report;
}

inline AxiomReport check_axioms(FieldKind field, std::size_t sample_budget = 1000) {
  return field == FieldKind::sign ? check_sign_axioms() : check_tropical_axioms(sample_budget);
}

}  // namespace hyperfact
