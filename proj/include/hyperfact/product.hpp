#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hyperfact/maxplus_system.hpp"
#include "hyperfact/polynomial.hpp"

namespace hyperfact {

inline constexpr std::size_t kDefaultEnumerationDegree = 12;

namespace detail {

template <Hyperfield F>
void require_nonzero(std::span<const Polynomial<F>> factors) {
  if (factors.empty()) throw Error(ErrorKind::ZeroOperand, "empty list of factors");
  for (const auto& q : factors)
    if (q.is_zero()) throw Error(ErrorKind::ZeroOperand, "hyperproduct with the zero polynomial is {0}");
}

template <Hyperfield F>
std::size_t total_degree(std::span<const Polynomial<F>> factors) {
  std::size_t d = 0;
  for (const auto& q : factors) d += q.deg();
  return d;
}

// Finite-domain search for 𝕊. The unknowns are the coefficients of the
// intermediate products s_2, ..., s_{n-1} of the left-nested product; each
// constraint reads target ∈ ⊞ coef·slot.
class SignMembershipSearch {
 public:
  struct Slot {
    int var = -1;  // -1: constant
    SignValue value = SignValue::zero;
  };
  struct Term {
    Slot slot;
    SignValue coef;
  };
  struct Constraint {
    Slot target;
    std::vector<Term> terms;
  };

  int add_variable() {
    domains_.push_back(SignSubset::full());
    watchers_.emplace_back();
    return static_cast<int>(domains_.size()) - 1;
  }

  void add_constraint(Constraint c) {
    const int index = static_cast<int>(constraints_.size());
    if (c.target.var >= 0) watch(c.target.var, index);
    for (const Term& t : c.terms)
      if (t.slot.var >= 0) watch(t.slot.var, index);
    constraints_.push_back(std::move(c));
  }

  bool solve() {
    std::vector<SignSubset> domains = domains_;
    if (!propagate(domains)) return false;
    return dfs(domains);
  }

 private:
  void watch(int var, int constraint) {
    watchers_[static_cast<std::size_t>(var)].push_back(constraint);
  }

  static SignSubset domain_of(const Slot& s, const std::vector<SignSubset>& domains) {
    return s.var < 0 ? SignSubset{s.value} : domains[static_cast<std::size_t>(s.var)];
  }

  // Exact satisfiability of one constraint given independent slot domains.
  static bool satisfiable(SignSubset target, const std::vector<SignSubset>& term_domains) {
    bool any_plus = false, any_minus = false, all_zero = true;
    int plus_count = 0, minus_count = 0, both_count = 0;
    for (SignSubset d : term_domains) {
      const bool p = d.contains(SignValue::plus);
      const bool m = d.contains(SignValue::minus);
      any_plus = any_plus || p;
      any_minus = any_minus || m;
      all_zero = all_zero && d.contains(SignValue::zero);
      plus_count += p;
      minus_count += m;
      both_count += (p && m);
    }
    if (target.contains(SignValue::plus) && any_plus) return true;
    if (target.contains(SignValue::minus) && any_minus) return true;
    if (target.contains(SignValue::zero)) {
      if (all_zero) return true;
      // Two distinct terms taking opposite signs.
      if (plus_count >= 1 && minus_count >= 1 && !(plus_count == 1 && minus_count == 1 && both_count == 1))
        return true;
    }
    return false;
  }

  bool check(const Constraint& c, const std::vector<SignSubset>& domains, int fixed_var,
             SignValue fixed_value) const {
    auto dom = [&](const Slot& s) {
      return s.var >= 0 && s.var == fixed_var ? SignSubset{fixed_value} : domain_of(s, domains);
    };
    std::vector<SignSubset> term_domains;
    term_domains.reserve(c.terms.size());
    for (const Term& t : c.terms) term_domains.push_back(dom(t.slot).scaled(t.coef));
    return satisfiable(dom(c.target), term_domains);
  }

  // Generalized arc consistency to a fixpoint; false on a wiped-out domain.
  bool propagate(std::vector<SignSubset>& domains) const {
    std::vector<int> queue(constraints_.size());
    for (std::size_t i = 0; i < queue.size(); ++i) queue[i] = static_cast<int>(i);
    std::vector<char> queued(constraints_.size(), 1);
    while (!queue.empty()) {
      const int ci = queue.back();
      queue.pop_back();
      queued[static_cast<std::size_t>(ci)] = 0;
      const Constraint& c = constraints_[static_cast<std::size_t>(ci)];
      if (!check(c, domains, -1, SignValue::zero)) return false;
      std::vector<int> vars;
      if (c.target.var >= 0) vars.push_back(c.target.var);
      for (const Term& t : c.terms)
        if (t.slot.var >= 0) vars.push_back(t.slot.var);
      for (int v : vars) {
        SignSubset& dom = domains[static_cast<std::size_t>(v)];
        SignSubset kept;
        for (SignValue value : kSignValues)
          if (dom.contains(value) && check(c, domains, v, value)) kept.insert(value);
        if (kept.empty()) return false;
        if (kept == dom) continue;
        dom = kept;
        for (int other : watchers_[static_cast<std::size_t>(v)]) {
          if (other != ci && !queued[static_cast<std::size_t>(other)]) {
            queued[static_cast<std::size_t>(other)] = 1;
            queue.push_back(other);
          }
        }
      }
    }
    return true;
  }

  bool dfs(std::vector<SignSubset>& domains) const {
    int best = -1;
    int best_size = 4;
    for (std::size_t v = 0; v < domains.size(); ++v) {
      const int size = __builtin_popcount(domains[v].bits());
      if (size > 1 && size < best_size) {
        best = static_cast<int>(v);
        best_size = size;
      }
    }
    if (best < 0) return true;
    for (SignValue value : {SignValue::plus, SignValue::minus, SignValue::zero}) {
      if (!domains[static_cast<std::size_t>(best)].contains(value)) continue;
      std::vector<SignSubset> next = domains;
      next[static_cast<std::size_t>(best)] = SignSubset{value};
      if (propagate(next) && dfs(next)) return true;
    }
    return false;
  }

  std::vector<SignSubset> domains_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<int>> watchers_;
};

inline bool in_product_sign_search(const SignPoly& r, std::span<const SignPoly> factors) {
  using Slot = SignMembershipSearch::Slot;
  SignMembershipSearch search;
  // layer[j][i] is coefficient i of the j-th left-nested partial product.
  std::vector<std::vector<Slot>> layers;
  std::vector<Slot> first;
  for (SignValue c : factors[0].coeffs()) first.push_back(Slot{-1, c});
  layers.push_back(std::move(first));
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const SignPoly& q = factors[j];
    const std::vector<Slot>& prev = layers.back();
    const std::size_t deg_prev = prev.size() - 1;
    const std::size_t deg = deg_prev + q.deg();
    std::vector<Slot> next;
    if (j + 1 == factors.size()) {
      for (SignValue c : r.coeffs()) next.push_back(Slot{-1, c});
    } else {
      for (std::size_t i = 0; i <= deg; ++i) next.push_back(Slot{search.add_variable(), SignValue::zero});
    }
    for (std::size_t i = 0; i <= deg; ++i) {
      SignMembershipSearch::Constraint c{next[i], {}};
      for (std::size_t k = (i > q.deg() ? i - q.deg() : 0); k <= std::min(i, deg_prev); ++k) {
        const SignValue coef = q.coeffs()[i - k];
        if (coef != SignValue::zero) c.terms.push_back({prev[k], coef});
      }
      if (c.terms.empty()) c.terms.push_back({Slot{-1, SignValue::zero}, SignValue::plus});
      search.add_constraint(std::move(c));
    }
    layers.push_back(std::move(next));
  }
  return search.solve();
}

inline bool in_product_tropical_search(const TropPoly& r, std::span<const TropPoly> factors) {
  MaxPlusSystem system;
  // Each slot is an unknown (var >= 0) or a constant; tops bound the unknowns.
  struct Slot {
    int var;
    TropValue value;  // constant value, or upper bound of the unknown
  };
  std::vector<Slot> prev;
  for (const TropValue& c : factors[0].coeffs()) prev.push_back(Slot{-1, c});
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const TropPoly& q = factors[j];
    const std::size_t deg_prev = prev.size() - 1;
    const std::size_t deg = deg_prev + q.deg();
    const bool last = j + 1 == factors.size();
    std::vector<Slot> next;
    for (std::size_t i = 0; i <= deg; ++i) {
      std::vector<MaxPlusSystem::Term> terms;
      TropValue top = TropValue::zero();
      for (std::size_t k = (i > q.deg() ? i - q.deg() : 0); k <= std::min(i, deg_prev); ++k) {
        const TropValue& coef = q.coeffs()[i - k];
        const Slot& s = prev[k];
        top = std::max(top, s.value * coef);
        terms.push_back(s.var < 0 ? MaxPlusSystem::constant(s.value * coef)
                                  : MaxPlusSystem::variable(s.var, coef));
      }
      Slot target = last ? Slot{-1, r.coeffs()[i]} : Slot{system.add_variable(top), top};
      terms.insert(terms.begin(), target.var < 0 ? MaxPlusSystem::constant(target.value)
                                                 : MaxPlusSystem::variable(target.var));
      if (terms.size() < 2) terms.push_back(MaxPlusSystem::constant(TropValue::zero()));
      system.add_constraint(std::move(terms));
      next.push_back(std::move(target));
    }
    prev = std::move(next);
  }
  return system.solve().has_value();
}

}  // namespace detail

/// r ∈ q_1 ⊡ ... ⊡ q_n, nested to the left: ((q_1 ⊡ q_2) ⊡ q_3) ⊡ ... .
///
/// Two factors are decided coefficientwise. For more factors the intermediate
/// products are unknowns: over 𝕊 a finite-domain search with arc consistency,
/// over 𝕋 the exact `MaxPlusSystem` search.
template <Hyperfield F>
bool in_product(const Polynomial<F>& r, std::span<const Polynomial<F>> factors) {
  detail::require_nonzero<F>(factors);
  if (factors.size() == 1) return r == factors[0];
  if (factors.size() == 2) return in_product(r, factors[0], factors[1]);
  if (r.degree() != std::optional<std::size_t>(detail::total_degree<F>(factors))) return false;
  if constexpr (F::kind == FieldKind::sign) {
    return detail::in_product_sign_search(r, factors);
  } else {
    return detail::in_product_tropical_search(r, factors);
  }
}

template <Hyperfield F>
bool in_product(const Polynomial<F>& r, std::initializer_list<Polynomial<F>> factors) {
  return in_product(r, std::span<const Polynomial<F>>(factors.begin(), factors.size()));
}

/// All elements of p ⊡ q over 𝕊, sorted canonically.
inline std::vector<SignPoly> enumerate_product(const SignPoly& p, const SignPoly& q) {
  const auto sets = product_coefficient_sets(p, q);
  std::vector<std::vector<SignValue>> partial{{}};
  for (SignSubset s : sets) {
    std::vector<std::vector<SignValue>> grown;
    for (const auto& prefix : partial)
      for (SignValue v : kSignValues)
        if (s.contains(v)) {
          grown.push_back(prefix);
          grown.back().push_back(v);
        }
    partial = std::move(grown);
  }
  std::vector<SignPoly> out;
  out.reserve(partial.size());
  for (auto& coeffs : partial) out.emplace_back(std::move(coeffs));
  std::sort(out.begin(), out.end());
  return out;
}

/// ⋃ {s ⊡ q : s ∈ set}, sorted and deduplicated.
inline std::vector<SignPoly> enumerate_product(std::span<const SignPoly> set, const SignPoly& q) {
  std::set<SignPoly> acc;
  for (const SignPoly& s : set)
    for (SignPoly& r : enumerate_product(s, q)) acc.insert(std::move(r));
  return {acc.begin(), acc.end()};
}

/// The finite set q_1 ⊡ ... ⊡ q_n over 𝕊, nested to the left, in canonical order.
inline std::vector<SignPoly> enumerate_product(std::span<const SignPoly> factors,
                                               std::size_t max_degree = kDefaultEnumerationDegree) {
  detail::require_nonzero<SignField>(factors);
  if (detail::total_degree<SignField>(factors) > max_degree)
    throw Error(ErrorKind::DegreeBoundExceeded, "hyperproduct degree exceeds the enumeration bound");
  std::vector<SignPoly> acc{factors[0]};
  for (std::size_t j = 1; j < factors.size(); ++j) acc = enumerate_product(acc, factors[j]);
  return acc;
}

}  // namespace hyperfact
