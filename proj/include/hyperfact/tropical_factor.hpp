#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperfact/maxplus_system.hpp"
#include "hyperfact/polynomial.hpp"

namespace hyperfact {

struct NewtonVertex {
  std::size_t index;
  Rational height;  // -log c_index
};

/// Lower convex hull of the points (i, -log c_i) of a tropical polynomial.
///
/// Zero coefficients have height +∞ and do not constrain the hull. The slopes
/// of the hull, each repeated over the width of its segment, are the log
/// coordinates of the nonzero roots; `zero_root_multiplicity` counts the
/// vanishing low-order coefficients c_0 = ... = c_{l-1} = 0.
struct NewtonPolygon {
  std::size_t degree = 0;
  std::vector<std::pair<std::size_t, std::optional<Rational>>> points;  // nullopt: +∞
  std::vector<NewtonVertex> vertices;
  std::vector<Rational> slopes;
  std::size_t zero_root_multiplicity = 0;
};

/// A root a with multiplicity m occupying positions start .. start+m-1 (1-based)
/// of the sorted root list.
struct RootLocus {
  TropValue root;
  std::size_t multiplicity = 0;
  std::size_t start = 0;

  friend bool operator==(const RootLocus&, const RootLocus&) = default;
};

struct TropicalFactorization {
  TropValue unit;                 // leading coefficient c_n
  std::vector<TropValue> roots;   // a_1 <= ... <= a_n
  std::vector<TropPoly> factors;  // T + a_i, same order
};

namespace detail {

inline void require_positive_degree(const TropPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroOperand, "the zero polynomial has no roots to extract");
  if (p.deg() == 0) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no roots");
}

// Twice the signed area of (o, a, b); positive for a left turn.
inline Rational cross(const NewtonVertex& o, const NewtonVertex& a, const NewtonVertex& b) {
  const Rational ax = Rational(static_cast<long>(a.index) - static_cast<long>(o.index));
  const Rational bx = Rational(static_cast<long>(b.index) - static_cast<long>(o.index));
  return ax * (b.height - o.height) - (a.height - o.height) * bx;
}

}  // namespace detail

inline NewtonPolygon newton_polygon(const TropPoly& p) {
  detail::require_positive_degree(p);
  NewtonPolygon poly;
  poly.degree = p.deg();
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero())
      poly.points.emplace_back(i, std::nullopt);
    else
      poly.points.emplace_back(i, Rational(-c[i].exponent()));
  }
  while (c[poly.zero_root_multiplicity].is_zero()) ++poly.zero_root_multiplicity;

  for (const auto& [i, height] : poly.points) {
    if (!height) continue;
    NewtonVertex v{i, *height};
    while (poly.vertices.size() >= 2 &&
           detail::cross(poly.vertices[poly.vertices.size() - 2], poly.vertices.back(), v) <= 0)
      poly.vertices.pop_back();
    poly.vertices.push_back(std::move(v));
  }
  for (std::size_t s = 1; s < poly.vertices.size(); ++s) {
    const NewtonVertex& a = poly.vertices[s - 1];
    const NewtonVertex& b = poly.vertices[s];
    const long width = static_cast<long>(b.index - a.index);
    const Rational slope = (b.height - a.height) / Rational(width);
    for (long w = 0; w < width; ++w) poly.slopes.push_back(slope);
  }
  return poly;
}

/// The sorted roots a_1 <= ... <= a_n with p ∈ c_n ⊡ (T + a_1) ⊡ ... ⊡ (T + a_n).
inline std::vector<TropValue> sorted_roots(const TropPoly& p) {
  const NewtonPolygon poly = newton_polygon(p);
  std::vector<TropValue> roots(poly.zero_root_multiplicity, TropValue::zero());
  for (const Rational& s : poly.slopes) roots.push_back(TropValue::log(s));
  return roots;
}

inline std::vector<RootLocus> roots_with_multiplicities(const TropPoly& p) {
  const std::vector<TropValue> roots = sorted_roots(p);
  std::vector<RootLocus> loci;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!loci.empty() && loci.back().root == roots[i])
      ++loci.back().multiplicity;
    else
      loci.push_back(RootLocus{roots[i], 1, i + 1});
  }
  return loci;
}

/// Membership of c_n^{-1}·p in (T + a_1) ⊡ ... ⊡ (T + a_n) for sorted roots:
/// c_i <= a_{i+1}···a_n for every i < n, with equality when i = 0 or a_i < a_{i+1}.
inline bool satisfies_root_criterion(const TropPoly& p, std::span<const TropValue> roots) {
  if (p.is_zero() || p.deg() != roots.size()) return false;
  if (!std::is_sorted(roots.begin(), roots.end())) return false;
  const std::size_t n = roots.size();
  const TropValue unit_inv = p.leading().inverse();
  TropValue tail = TropValue::one();  // a_{i+1} ··· a_n, built from the top
  for (std::size_t i = n; i-- > 0;) {
    tail = tail * roots[i];  // roots[i] is a_{i+1}
    const TropValue ci = unit_inv * p.coeffs()[i];
    const bool strict_step = i == 0 || roots[i - 1] < roots[i];
    if (strict_step ? !(ci == tail) : tail < ci) return false;
  }
  return true;
}

/// Unique factorization c_n ⊡ (T + a_1) ⊡ ... ⊡ (T + a_n) into linear factors.
inline TropicalFactorization factor(const TropPoly& p) {
  TropicalFactorization f;
  f.roots = sorted_roots(p);
  f.unit = p.leading();
  for (const TropValue& a : f.roots) f.factors.push_back(TropPoly::linear(a));
  return f;
}

/// The tropical division algorithm: a quotient q with p ∈ (T + a) ⊡ q for a
/// root a of p. The result is coefficientwise the largest such quotient.
inline TropPoly divide(const TropPoly& p, const TropValue& a) {
  detail::require_positive_degree(p);
  if (!is_root(p, a)) throw Error(ErrorKind::NotARoot, a.str() + " is not a root of the dividend");
  const std::size_t n = p.deg();
  const auto& c = p.coeffs();
  if (a.is_zero()) return TropPoly(std::vector<TropValue>(c.begin() + 1, c.end()));

  // Work with the monic associate and rescale at the end.
  const TropValue unit = p.leading();
  std::vector<TropValue> monic;
  for (const TropValue& ci : c) monic.push_back(unit.inverse() * ci);
  const std::vector<TropValue> roots = sorted_roots(p);

  std::size_t k = 0;  // 1-based start of the root locus of a
  std::size_t m = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == a) {
      if (k == 0) k = i + 1;
      ++m;
    }
  }
  if (k == 0) throw Error(ErrorKind::InternalInvariantViolated, "root missing from the Newton polygon");
  auto root = [&](std::size_t j) -> const TropValue& { return roots[j - 1]; };

  std::vector<TropValue> d(n, TropValue::zero());
  const TropValue a_inv = a.inverse();
  // Step 1: from the top down to k+m-1, as in long division over a field.
  if (k <= n - m) {
    d[n - 1] = monic[n];
    for (std::size_t i = n - 1; i-- > k + m - 1;) d[i] = std::max(monic[i + 1], a * d[i + 1]);
  }
  // Step 2: from the bottom up to k-2, dividing by a.
  if (k >= 2) {
    d[0] = a_inv * monic[0];
    for (std::size_t i = 1; i + 2 <= k; ++i) d[i] = std::max(a_inv * monic[i], a_inv * d[i - 1]);
  }
  // Step 3: inside the locus, the explicit tail products a_{i+2} ··· a_n.
  for (std::size_t i = k - 1; i + 2 <= k + m; ++i) {
    TropValue tail = monic[n];
    for (std::size_t j = i + 2; j <= n; ++j) tail = tail * root(j);
    d[i] = tail;
  }
  return scale(unit, TropPoly(std::move(d)));
}

/// p ∈ (T + a) ⊡ q (over 𝕋, -a = a).
inline bool is_quotient(const TropPoly& p, const TropValue& a, const TropPoly& q) {
  return is_linear_quotient(p, a, q);
}

/// Coefficientwise bounds of the set {q : p ∈ (T + a) ⊡ q}.
struct QuotientHull {
  std::vector<TropValue> lower;
  std::vector<TropValue> upper;
  std::size_t pieces = 0;

  bool is_single_point() const { return lower == upper; }
};

/// Exact hull of all quotients of p by T + a, by exhaustive enumeration of the
/// tie patterns of the coefficient relations. Exponential in deg p; meant for
/// small degrees. Returns nullopt when a is not a root.
inline std::optional<QuotientHull> quotient_hull(const TropPoly& p, const TropValue& a) {
  detail::require_positive_degree(p);
  const std::size_t n = p.deg();
  const auto& c = p.coeffs();
  MaxPlusSystem system;
  // Upper bounds: a·d_i cannot be the lone maximum of c_i, a·d_i, d_{i-1}.
  std::vector<int> vars;
  TropValue prev_top = TropValue::zero();
  for (std::size_t i = 0; i < n; ++i) {
    TropValue top;
    if (a.is_zero()) {
      top = c[i + 1];
    } else {
      top = a.inverse() * std::max(c[i], prev_top);
      if (i == n - 1) top = std::max(top, c[n]);
    }
    vars.push_back(system.add_variable(top));
    prev_top = top;
  }
  using MPS = MaxPlusSystem;
  system.add_constraint({MPS::constant(c[0]), MPS::variable(vars[0], a)});
  for (std::size_t i = 1; i < n; ++i)
    system.add_constraint({MPS::constant(c[i]), MPS::variable(vars[i], a), MPS::variable(vars[i - 1])});
  system.add_constraint({MPS::constant(c[n]), MPS::variable(vars[n - 1])});
  auto hull = system.hull();
  if (!hull) return std::nullopt;
  return QuotientHull{std::move(hull->lower), std::move(hull->upper), hull->pieces};
}

}  // namespace hyperfact
