#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hyperfact/errors.hpp"
#include "hyperfact/tropical.hpp"

namespace hyperfact {

/// Exact decision procedure for systems of tropical membership constraints.
///
/// Unknowns x_0 .. x_{N-1} range over 𝕋 with an upper bound each. A term is either
/// offset·x_v or a constant. A constraint lists terms and holds when the maximum
/// of its terms is attained at least twice, which is exactly the statement
/// t_0 ∈ t_1 ⊞ ... ⊞ t_m for any choice of which term plays the target.
///
/// Fixing, per constraint, the pair of terms that ties at the maximum turns the
/// system into difference inequalities between log coordinates (with zero as -∞).
/// Such a system has a greatest solution, found by shortest paths. `solve()`
/// branches lazily: it only fixes a pair for a constraint violated by the current
/// greatest solution, so a witness is returned as soon as one appears.
class MaxPlusSystem {
 public:
  static constexpr int kConstant = -1;

  struct Term {
    int var = kConstant;  // kConstant for a constant term
    TropValue offset;     // the constant itself when var == kConstant
  };

  using Constraint = std::vector<Term>;

  /// Adds an unknown bounded above by `top` and returns its index.
  int add_variable(TropValue top) {
    tops_.push_back(std::move(top));
    return static_cast<int>(tops_.size()) - 1;
  }

  static Term constant(TropValue c) { return Term{kConstant, std::move(c)}; }
  static Term variable(int v, TropValue offset = TropValue::one()) { return Term{v, std::move(offset)}; }

  void add_constraint(Constraint terms) {
    if (terms.size() < 2) throw Error(ErrorKind::InternalInvariantViolated, "constraint needs two terms");
    constraints_.push_back(std::move(terms));
  }

  std::size_t variable_count() const noexcept { return tops_.size(); }
  std::size_t constraint_count() const noexcept { return constraints_.size(); }

  /// Maximum number of search nodes before SearchLimitExceeded is raised.
  void set_node_limit(std::size_t limit) noexcept { node_limit_ = limit; }

  /// Evaluates every constraint at `x`.
  bool satisfied_by(const std::vector<TropValue>& x) const {
    for (const Constraint& c : constraints_)
      if (!holds(c, x)) return false;
    return true;
  }

  /// A point satisfying all constraints and bounds, or nullopt if none exists.
  std::optional<std::vector<TropValue>> solve() const {
    nodes_ = 0;
    std::vector<Edge> edges;
    return search(edges);
  }

  /// Componentwise minimum and maximum over the whole solution set.
  struct Hull {
    std::vector<TropValue> lower;
    std::vector<TropValue> upper;
    std::size_t pieces = 0;  // feasible leaves of the pair enumeration
  };

  /// Enumerates every pair assignment; nullopt if the system is infeasible.
  std::optional<Hull> hull() const {
    nodes_ = 0;
    Hull h;
    std::vector<Edge> edges;
    enumerate(0, edges, h);
    if (h.pieces == 0) return std::nullopt;
    return h;
  }

 private:
  // Difference inequality x_from ≤ x_to · weight. `to == one_node()` is the
  // constant 1; a zero weight forces x_from = 0.
  struct Edge {
    int from;
    int to;
    TropValue weight;
  };

  int one_node() const noexcept { return static_cast<int>(tops_.size()); }

  int node_of(const Term& t) const noexcept { return t.var == kConstant ? one_node() : t.var; }

  static TropValue term_value(const Term& t, const std::vector<TropValue>& x) {
    return t.var == kConstant ? t.offset : x[static_cast<std::size_t>(t.var)] * t.offset;
  }

  static bool holds(const Constraint& c, const std::vector<TropValue>& x) {
    TropValue best = term_value(c.front(), x);
    std::size_t count = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      TropValue v = term_value(c[i], x);
      if (best < v) {
        best = std::move(v);
        count = 1;
      } else if (v == best) {
        ++count;
      }
    }
    return count > 1;
  }

  // Adds t_low ≤ t_high.
  void add_le(std::vector<Edge>& edges, const Term& low, const Term& high) const {
    if (low.offset.is_zero()) return;
    if (high.offset.is_zero()) {
      edges.push_back(Edge{node_of(low), one_node(), TropValue::zero()});
      return;
    }
    edges.push_back(Edge{node_of(low), node_of(high), high.offset / low.offset});
  }

  void add_pair(std::vector<Edge>& edges, const Constraint& c, std::size_t u, std::size_t v) const {
    add_le(edges, c[u], c[v]);
    add_le(edges, c[v], c[u]);
    for (std::size_t w = 0; w < c.size(); ++w)
      if (w != u && w != v) add_le(edges, c[w], c[u]);
  }

  // Greatest solution of the bounds plus `edges`, or nullopt when infeasible.
  std::optional<std::vector<TropValue>> greatest(const std::vector<Edge>& edges) const {
    const std::size_t n = tops_.size() + 1;
    std::vector<TropValue> dist(tops_);
    dist.push_back(TropValue::one());
    auto relax = [&](bool collapse) {
      bool changed = false;
      for (const Edge& e : edges) {
        const std::size_t a = static_cast<std::size_t>(e.from);
        TropValue cand = dist[static_cast<std::size_t>(e.to)] * e.weight;
        if (cand < dist[a]) {
          dist[a] = collapse ? TropValue::zero() : std::move(cand);
          changed = true;
        }
      }
      return changed;
    };
    bool changed = true;
    for (std::size_t round = 0; round < n && changed; ++round) changed = relax(false);
    if (changed) {
      // Negative cycles: everything they reach drops to zero (-∞ in log coordinates).
      for (std::size_t round = 0; round < n && changed; ++round) changed = relax(true);
    }
    if (dist.back() != TropValue::one()) return std::nullopt;
    dist.pop_back();
    return dist;
  }

  // Least solution of a feasible edge set.
  std::vector<TropValue> least(const std::vector<Edge>& edges) const {
    const std::size_t n = tops_.size() + 1;
    std::vector<TropValue> low(n, TropValue::zero());
    low.back() = TropValue::one();
    bool changed = true;
    for (std::size_t round = 0; round <= n && changed; ++round) {
      changed = false;
      for (const Edge& e : edges) {
        // x_from ≤ x_to·w  gives  x_to ≥ x_from / w.
        if (e.weight.is_zero()) continue;
        const TropValue& from = low[static_cast<std::size_t>(e.from)];
        if (from.is_zero()) continue;
        TropValue cand = from / e.weight;
        TropValue& to = low[static_cast<std::size_t>(e.to)];
        if (to < cand) {
          to = std::move(cand);
          changed = true;
        }
      }
    }
    low.pop_back();
    return low;
  }

  void count_node() const {
    if (++nodes_ > node_limit_)
      throw Error(ErrorKind::SearchLimitExceeded, "tropical membership search exceeded its node limit");
  }

  std::optional<std::vector<TropValue>> search(std::vector<Edge>& edges) const {
    count_node();
    auto x = greatest(edges);
    if (!x) return std::nullopt;
    const Constraint* violated = nullptr;
    for (const Constraint& c : constraints_) {
      if (!holds(c, *x)) {
        violated = &c;
        break;
      }
    }
    if (violated == nullptr) return x;

    const Constraint& c = *violated;
    std::vector<TropValue> values;
    for (const Term& t : c) values.push_back(term_value(t, *x));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < c.size(); ++u)
      for (std::size_t v = u + 1; v < c.size(); ++v) pairs.emplace_back(u, v);
    // Pairs whose smaller value is largest first: they need the least lowering.
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& l, const auto& r) {
      const TropValue& lmin = std::min(values[l.first], values[l.second]);
      const TropValue& rmin = std::min(values[r.first], values[r.second]);
      return rmin < lmin;
    });
    const std::size_t mark = edges.size();
    for (const auto& [u, v] : pairs) {
      add_pair(edges, c, u, v);
      auto found = search(edges);
      edges.resize(mark);
      if (found) return found;
    }
    return std::nullopt;
  }

  void enumerate(std::size_t index, std::vector<Edge>& edges, Hull& h) const {
    count_node();
    if (!greatest(edges)) return;
    if (index == constraints_.size()) {
      auto hi = *greatest(edges);
      auto lo = least(edges);
      if (h.pieces == 0) {
        h.lower = std::move(lo);
        h.upper = std::move(hi);
      } else {
        for (std::size_t i = 0; i < hi.size(); ++i) {
          if (lo[i] < h.lower[i]) h.lower[i] = lo[i];
          if (h.upper[i] < hi[i]) h.upper[i] = hi[i];
        }
      }
      ++h.pieces;
      return;
    }
    const Constraint& c = constraints_[index];
    const std::size_t mark = edges.size();
    for (std::size_t u = 0; u < c.size(); ++u)
      for (std::size_t v = u + 1; v < c.size(); ++v) {
        add_pair(edges, c, u, v);
        enumerate(index + 1, edges, h);
        edges.resize(mark);
      }
  }

  std::vector<TropValue> tops_;
  std::vector<Constraint> constraints_;
  std::size_t node_limit_ = 5'000'000;
  mutable std::size_t nodes_ = 0;
};

}  // namespace hyperfact
