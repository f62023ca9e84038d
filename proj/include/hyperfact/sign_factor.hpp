#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperfact/io.hpp"
#include "hyperfact/product.hpp"

namespace hyperfact {

/// l: index of the lowest nonzero coefficient. k: least i with c_{i+1} = -a^{i+1-l}·c_l.
struct SignDivisionParams {
  std::size_t l = 0;
  std::size_t k = 0;

  friend bool operator==(const SignDivisionParams&, const SignDivisionParams&) = default;
};

namespace detail {

inline void require_sign_degree(const SignPoly& p, std::size_t max_degree) {
  if (max_degree > kDefaultEnumerationDegree)
    throw Error(ErrorKind::DegreeBoundExceeded,
                "enumeration bound is capped at " + std::to_string(kDefaultEnumerationDegree));
  if (p.is_zero()) throw Error(ErrorKind::ZeroOperand, "the zero polynomial");
  if (p.deg() > max_degree)
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(p.deg()) + " exceeds the enumeration bound " +
                    std::to_string(max_degree));
}

inline void require_sign_root(const SignPoly& p, SignValue a) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroOperand, "division of the zero polynomial");
  if (p.deg() == 0) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no roots");
  if (!is_root(p, a)) throw Error(ErrorKind::NotARoot, to_string(a) + " is not a root of the dividend");
}

}  // namespace detail

/// Every sign polynomial of exact degree `degree`, in canonical order. With
/// `monic`, only those with leading coefficient +1.
inline std::vector<SignPoly> sign_polynomials_of_degree(std::size_t degree, bool monic = false) {
  std::vector<SignPoly> out;
  std::vector<SignValue> coeffs(degree + 1, SignValue::minus);
  std::size_t total = 1;
  for (std::size_t i = 0; i < degree; ++i) total *= 3;
  for (SignValue lead : kSignValues) {
    if (lead == SignValue::zero || (monic && lead != SignValue::plus)) continue;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t i = degree; i-- > 0;) {
        coeffs[i] = kSignValues[rest % 3];
        rest /= 3;
      }
      coeffs[degree] = lead;
      out.emplace_back(coeffs);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// p(-T).
inline SignPoly reflect(const SignPoly& p) {
  std::vector<SignValue> coeffs = p.coeffs();
  for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
  return SignPoly(std::move(coeffs));
}

/// The indices l and k steering the division by T - a for a root a = ±1.
inline SignDivisionParams sign_division_params(const SignPoly& p, SignValue a) {
  detail::require_sign_root(p, a);
  if (a == SignValue::zero) throw Error(ErrorKind::Domain, "division parameters need a nonzero root");
  const auto& c = p.coeffs();
  SignDivisionParams params;
  while (c[params.l] == SignValue::zero) ++params.l;
  for (std::size_t i = params.l; i + 1 < c.size(); ++i) {
    if (c[i + 1] == -(sign_pow(a, static_cast<long>(i + 1 - params.l)) * c[params.l])) {
      params.k = i;
      return params;
    }
  }
  throw Error(ErrorKind::InternalInvariantViolated, "no sign change found for a root");
}

/// A quotient q with p ∈ (T - a) ⊡ q for a root a of p.
inline SignPoly divide_sign(const SignPoly& p, SignValue a) {
  detail::require_sign_root(p, a);
  const auto& c = p.coeffs();
  const std::size_t n = p.deg();
  if (a == SignValue::zero) return SignPoly(std::vector<SignValue>(c.begin() + 1, c.end()));

  const auto [l, k] = sign_division_params(p, a);
  std::vector<SignValue> d(n, SignValue::zero);
  for (std::size_t i = n; i-- > 0;) {
    if (i > k)
      d[i] = c[i + 1] != SignValue::zero ? c[i + 1] : a * d[i + 1];
    else if (i >= l)
      d[i] = -(sign_pow(a, static_cast<long>(i + 1 - l)) * c[l]);
  }
  return SignPoly(std::move(d));
}

/// The exact set {q : p ∈ (T - a) ⊡ q}, in canonical order. Empty when a is not a root.
inline std::vector<SignPoly> all_quotients_sign(const SignPoly& p, SignValue a,
                                                std::size_t max_degree = kDefaultEnumerationDegree) {
  detail::require_sign_degree(p, max_degree);
  if (p.deg() == 0) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no linear factor");
  const auto& c = p.coeffs();
  const std::size_t n = p.deg();
  const SignValue minus_a = -a;
  std::vector<SignPoly> out;
  std::vector<SignValue> d(n, SignValue::zero);
  // Coefficient i of the product only involves d_i and d_{i-1}, so the relations
  // can be checked while the quotient is filled in from the bottom.
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (d[n - 1] == c[n]) out.emplace_back(d);
      return;
    }
    for (SignValue v : kSignValues) {
      if (i == n - 1 && v != c[n]) continue;
      bool ok;
      if (i == 0) {
        ok = c[0] == minus_a * v;
      } else {
        const SignValue pair[] = {minus_a * v, d[i - 1]};
        ok = sign_contains(c[i], pair);
      }
      if (!ok) continue;
      d[i] = v;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// p is irreducible if it has no factorization p ∈ q_1 ⊡ q_2 with both factors of positive degree.
inline bool is_irreducible_sign(const SignPoly& p, std::size_t max_degree = kDefaultEnumerationDegree) {
  detail::require_sign_degree(p, max_degree);
  const std::size_t n = p.deg();
  if (n == 0) throw Error(ErrorKind::ConstantPolynomial, "units are neither reducible nor irreducible");
  // Scaling by units moves any factorization to one with a monic first factor
  // and second factor of leading coefficient c_n.
  const SignValue lead = p.leading();
  for (std::size_t d1 = 1; 2 * d1 <= n; ++d1) {
    const std::vector<SignPoly> firsts = sign_polynomials_of_degree(d1, true);
    std::vector<SignPoly> seconds;
    for (const SignPoly& q : sign_polynomials_of_degree(n - d1, true)) seconds.push_back(scale(lead, q));
    for (const SignPoly& q1 : firsts)
      for (const SignPoly& q2 : seconds)
        if (in_product(p, q1, q2)) return false;
  }
  return true;
}

/// Monic irreducible sign polynomials of degree 1 .. max_degree, by degree then canonical order.
inline std::vector<SignPoly> classify_irreducibles(std::size_t max_degree) {
  if (max_degree > kDefaultEnumerationDegree)
    throw Error(ErrorKind::DegreeBoundExceeded, "classification degree exceeds the enumeration bound");
  std::vector<SignPoly> out;
  for (std::size_t d = 1; d <= max_degree; ++d)
    for (const SignPoly& q : sign_polynomials_of_degree(d, true))
      if (is_irreducible_sign(q, max_degree)) out.push_back(q);
  return out;
}

/// One multiset of monic irreducibles with p ∈ unit ⊡ (product of factors), and
/// a bracketing of the product that contains p.
struct SignFactorization {
  std::vector<SignPoly> factors;  // by degree, then canonical
  SignValue unit = SignValue::plus;
  std::string witness_nesting;

  friend bool operator==(const SignFactorization& a, const SignFactorization& b) {
    return a.factors == b.factors && a.unit == b.unit;
  }
};

namespace detail {

// Sets of products over all bracketings and orderings of a multiset of factors.
class NestedProducts {
 public:
  using Counts = std::vector<std::size_t>;

  explicit NestedProducts(std::vector<SignPoly> atoms) : atoms_(std::move(atoms)) {}

  const std::vector<SignPoly>& products(const Counts& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::set<SignPoly> acc;
    if (const auto atom = single_atom(m)) {
      acc.insert(atoms_[*atom]);
    } else {
      for_each_split(m, [&](const Counts& left, const Counts& right) {
        const std::vector<SignPoly> xs = products(left);
        const std::vector<SignPoly> ys = products(right);
        for (const SignPoly& x : xs)
          for (const SignPoly& y : ys)
            for (SignPoly& r : enumerate_product(x, y)) acc.insert(std::move(r));
        return false;
      });
    }
    return memo_.emplace(m, std::vector<SignPoly>(acc.begin(), acc.end())).first->second;
  }

  bool contains(const Counts& m, const SignPoly& r) {
    const auto& set = products(m);
    return std::binary_search(set.begin(), set.end(), r);
  }

  /// A bracketing of the multiset m whose product contains r; r must be reachable.
  std::string witness(const Counts& m, const SignPoly& r, bool nested = false) {
    if (const auto atom = single_atom(m)) {
      const std::string text = format_polynomial(atoms_[*atom]);
      const bool several_terms = text.find_first_of("+-", 1) != std::string::npos;
      return nested && several_terms ? "(" + text + ")" : text;
    }
    std::string out;
    for_each_split(m, [&](const Counts& left, const Counts& right) {
      for (const SignPoly& x : products(left))
        for (const SignPoly& y : products(right))
          if (in_product(r, x, y)) {
            out = "(" + witness(left, x, true) + "*" + witness(right, y, true) + ")";
            return true;
          }
      return false;
    });
    if (out.empty()) throw Error(ErrorKind::InternalInvariantViolated, "no bracketing reproduces the product");
    return out;
  }

 private:
  std::optional<std::size_t> single_atom(const Counts& m) const {
    std::size_t total = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      total += m[i];
      if (m[i] > 0) which = i;
    }
    if (total == 1) return which;
    return std::nullopt;
  }

  // Visits the unordered splits m = left + right with both parts nonempty,
  // larger left parts first; stops when `visit` returns true.
  template <class Visit>
  void for_each_split(const Counts& m, Visit&& visit) const {
    Counts left(m.size(), 0);
    Counts right(m.size(), 0);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (stop) return;
      if (i == m.size()) {
        right.assign(m.size(), 0);
        for (std::size_t j = 0; j < m.size(); ++j) right[j] = m[j] - left[j];
        // Each unordered pair once: left is the larger count vector.
        if (left >= right && std::any_of(right.begin(), right.end(), [](std::size_t x) { return x > 0; }))
          stop = visit(left, right);
        return;
      }
      for (std::size_t take = m[i] + 1; take-- > 0;) {
        left[i] = take;
        self(self, i + 1);
        if (stop) return;
      }
    };
    rec(rec, 0);
  }

  std::vector<SignPoly> atoms_;
  std::map<Counts, std::vector<SignPoly>> memo_;
};

}  // namespace detail

/// All multisets of monic irreducibles whose product, under some bracketing,
/// contains the monic associate of p. Sorted by factor list.
inline std::vector<SignFactorization> all_factorizations_sign(
    const SignPoly& p, std::size_t max_degree = kDefaultEnumerationDegree) {
  detail::require_sign_degree(p, max_degree);
  const std::size_t n = p.deg();
  const SignValue unit = p.leading();
  const SignPoly target = scale(unit, p);
  std::vector<SignFactorization> out;
  if (n == 0) {
    out.push_back(SignFactorization{{}, unit, format_polynomial(p)});
    return out;
  }
  // Irreducibles of degree above 2 do not occur; the sweep up to 4 is cheap
  // and confirms that on every call.
  const std::vector<SignPoly> atoms = classify_irreducibles(std::min<std::size_t>(n, 4));
  detail::NestedProducts nested(atoms);
  detail::NestedProducts::Counts counts(atoms.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (!nested.contains(counts, target)) return;
      SignFactorization f;
      for (std::size_t j = 0; j < atoms.size(); ++j)
        for (std::size_t t = 0; t < counts[j]; ++t) f.factors.push_back(atoms[j]);
      std::sort(f.factors.begin(), f.factors.end(), degree_then_canonical<SignField>);
      f.unit = unit;
      f.witness_nesting = nested.witness(counts, target);
      out.push_back(std::move(f));
      return;
    }
    if (i == atoms.size()) return;
    const std::size_t d = atoms[i].deg();
    for (std::size_t take = 0; take * d <= remaining; ++take) {
      counts[i] = take;
      self(self, i + 1, remaining - take * d);
    }
    counts[i] = 0;
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), [](const SignFactorization& x, const SignFactorization& y) {
    return std::lexicographical_compare(x.factors.begin(), x.factors.end(), y.factors.begin(), y.factors.end(),
                                        degree_then_canonical<SignField>);
  });
  return out;
}

/// Multiplicity of a as a root of p: 0 if a is not a root, otherwise one more
/// than the largest multiplicity of a in any quotient of p by T - a.
inline std::size_t multiplicity_sign(const SignPoly& p, SignValue a,
                                     std::size_t max_degree = kDefaultEnumerationDegree) {
  detail::require_sign_degree(p, max_degree);
  std::map<SignPoly, std::size_t> memo;
  auto rec = [&](auto&& self, const SignPoly& q) -> std::size_t {
    if (q.deg() == 0 || !is_root(q, a)) return 0;
    if (auto it = memo.find(q); it != memo.end()) return it->second;
    std::size_t best = 0;
    for (const SignPoly& r : all_quotients_sign(q, a, max_degree)) best = std::max(best, self(self, r));
    memo.emplace(q, best + 1);
    return best + 1;
  };
  return rec(rec, p);
}

struct DivisionSweepReport {
  std::size_t max_degree = 0;
  std::size_t cases = 0;  // (p, a) pairs with a = ±1 a root of p
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// For every sign polynomial of degree 1 .. max_degree and each root a = ±1,
/// checks that divide_sign lands in all_quotients_sign and that the a = -1
/// quotient is the reflection of the a = +1 quotient of p(-T).
inline DivisionSweepReport sweep_sign_division(std::size_t max_degree) {
  DivisionSweepReport report;
  report.max_degree = max_degree;
  auto fail = [&](std::string what) {
    if (report.failures.size() < 8) report.failures.push_back(std::move(what));
  };
  for (std::size_t n = 1; n <= max_degree; ++n) {
    for (const SignPoly& p : sign_polynomials_of_degree(n)) {
      for (SignValue a : {SignValue::minus, SignValue::plus}) {
        if (!is_root(p, a)) continue;
        ++report.cases;
        const SignPoly q = divide_sign(p, a);
        const auto all = all_quotients_sign(p, a, max_degree);
        if (!std::binary_search(all.begin(), all.end(), q))
          fail(format_polynomial(p) + " / (T-" + to_string(a) + "): " + format_polynomial(q) + " is not a quotient");
        if (a == SignValue::minus) {
          const SignPoly mirrored = scale(SignValue::minus, reflect(divide_sign(reflect(p), SignValue::plus)));
          if (!(mirrored == q))
            fail(format_polynomial(p) + ": reflected quotient " + format_polynomial(mirrored) + " differs");
        }
      }
    }
  }
  return report;
}

inline Json to_json(const SignFactorization& f) {
  Json factors = Json::array();
  for (const SignPoly& q : f.factors) factors.push_back(format_polynomial(q));
  Json out;
  out["factors"] = std::move(factors);
  out["unit"] = to_int(f.unit);
  out["witness_nesting"] = f.witness_nesting;
  return out;
}

}  // namespace hyperfact
