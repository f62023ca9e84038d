#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hyperfact/hyperfield.hpp"

namespace hyperfact {

/// Polynomial over a hyperfield with coefficients c_0, ..., c_n.
///
/// Coefficients above the degree are never stored, so the zero polynomial is the
/// empty coefficient vector and equality is coefficientwise.
template <Hyperfield F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  Polynomial() = default;
  explicit Polynomial(std::vector<value_type> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<value_type> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(value_type c) { return Polynomial(std::vector<value_type>{std::move(c)}); }

  /// c·T^k.
  static Polynomial monomial(value_type c, std::size_t k) {
    std::vector<value_type> coeffs(k + 1, F::zero());
    coeffs[k] = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  /// T - a, i.e. coefficients (-a, 1).
  static Polynomial linear(const value_type& a) { return Polynomial({F::neg(a), F::one()}); }

  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Largest k with c_k nonzero; empty for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Degree of a polynomial known to be nonzero.
  std::size_t deg() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroOperand, "degree of the zero polynomial");
    return coeffs_.size() - 1;
  }

  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F::zero(); }
  value_type operator[](std::size_t i) const { return coeff(i); }

  const value_type& leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroOperand, "leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == F::one(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical order: lexicographic on coefficient arrays, a proper prefix first.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                  b.coeffs_.begin(), b.coeffs_.end(), compare_values);
  }

 private:
  static std::strong_ordering compare_values(const value_type& x, const value_type& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == F::zero()) coeffs_.pop_back();
  }

  std::vector<value_type> coeffs_;
};

/// Display order: by degree, then canonically.
template <Hyperfield F>
bool degree_then_canonical(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  return a < b;
}

using TropPoly = Polynomial<TropicalField>;
using SignPoly = Polynomial<SignField>;

/// Entry i is the hypersum of c_k·d_l over k + l = i, for i = 0 .. deg p + deg q.
template <Hyperfield F>
std::vector<typename F::subset_type> product_coefficient_sets(const Polynomial<F>& p,
                                                               const Polynomial<F>& q) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorKind::ZeroOperand, "hyperproduct with the zero polynomial is {0}");
  const std::size_t n = p.deg();
  const std::size_t m = q.deg();
  std::vector<typename F::subset_type> sets;
  sets.reserve(n + m + 1);
  std::vector<typename F::value_type> terms;
  for (std::size_t i = 0; i <= n + m; ++i) {
    terms.clear();
    for (std::size_t k = (i > m ? i - m : 0); k <= std::min(i, n); ++k)
      terms.push_back(F::mul(p.coeffs()[k], q.coeffs()[i - k]));
    sets.push_back(F::hyperadd(terms));
  }
  return sets;
}

/// r ∈ p ⊡ q, decided coefficientwise.
template <Hyperfield F>
bool in_product(const Polynomial<F>& r, const Polynomial<F>& p, const Polynomial<F>& q) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorKind::ZeroOperand, "hyperproduct with the zero polynomial is {0}");
  const std::size_t n = p.deg();
  const std::size_t m = q.deg();
  if (r.degree() != std::optional<std::size_t>(n + m)) return false;
  std::vector<typename F::value_type> terms;
  for (std::size_t i = 0; i <= n + m; ++i) {
    terms.clear();
    for (std::size_t k = (i > m ? i - m : 0); k <= std::min(i, n); ++k)
      terms.push_back(F::mul(p.coeffs()[k], q.coeffs()[i - k]));
    if (!F::contains(r.coeffs()[i], terms)) return false;
  }
  return true;
}

/// The unique element of a ⊡ p.
template <Hyperfield F>
Polynomial<F> scale(const typename F::value_type& a, const Polynomial<F>& p) {
  std::vector<typename F::value_type> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(F::mul(a, c));
  return Polynomial<F>(std::move(coeffs));
}

/// The unique element of p ⊡ a·T^k.
template <Hyperfield F>
Polynomial<F> shift_scale(const Polynomial<F>& p, const typename F::value_type& a, std::size_t k) {
  if (p.is_zero() || a == F::zero()) return Polynomial<F>();
  std::vector<typename F::value_type> coeffs(k, F::zero());
  for (const auto& c : p.coeffs()) coeffs.push_back(F::mul(a, c));
  return Polynomial<F>(std::move(coeffs));
}

template <Hyperfield F>
Polynomial<F> monic_normal(const Polynomial<F>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroOperand, "the zero polynomial has no monic associate");
  return scale(F::inv(p.leading()), p);
}

/// p ~ q: p ∈ a ⊡ q for some unit a. The only candidate unit is lc(p)/lc(q).
template <Hyperfield F>
bool associated(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroOperand, "associates of the zero polynomial");
  if (p.deg() != q.deg()) return false;
  return p == scale(F::mul(p.leading(), F::inv(q.leading())), q);
}

/// 0 ∈ ⊞ c_i a^i.
template <Hyperfield F>
bool is_root(const Polynomial<F>& p, const typename F::value_type& a) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroOperand, "roots of the zero polynomial");
  std::vector<typename F::value_type> terms;
  typename F::value_type power = F::one();
  for (const auto& c : p.coeffs()) {
    terms.push_back(F::mul(c, power));
    power = F::mul(power, a);
  }
  if (terms.size() == 1) terms.push_back(F::zero());
  return F::contains(F::zero(), terms);
}

/// p ∈ (T - a) ⊡ q via the coefficient relations
/// deg p = 1 + deg q, c_0 = -a·d_0, c_i ∈ (-a·d_i) ⊞ d_{i-1}, c_n = d_{n-1}.
template <Hyperfield F>
bool is_linear_quotient(const Polynomial<F>& p, const typename F::value_type& a, const Polynomial<F>& q) {
  if (p.is_zero() || q.is_zero()) return false;
  const std::size_t n = p.deg();
  if (n != q.deg() + 1) return false;
  const auto minus_a = F::neg(a);
  const auto& c = p.coeffs();
  const auto& d = q.coeffs();
  if (!(c[n] == d[n - 1])) return false;
  if (!(c[0] == F::mul(minus_a, d[0]))) return false;
  for (std::size_t i = 1; i < n; ++i) {
    const typename F::value_type pair[] = {F::mul(minus_a, d[i]), d[i - 1]};
    if (!F::contains(c[i], pair)) return false;
  }
  return true;
}

/// Image of a polynomial under a coefficient map, with a flag for a degree drop.
template <Hyperfield To>
struct Pushforward {
  Polynomial<To> image;
  bool degree_dropped = false;
};

/// Applies `f` coefficientwise: f(Σ c_i T^i) = Σ f(c_i) T^i.
template <Hyperfield To, class Coeff, class Map>
Pushforward<To> pushforward(const std::vector<Coeff>& coeffs, Map&& f) {
  std::vector<typename To::value_type> image;
  image.reserve(coeffs.size());
  for (const Coeff& c : coeffs) image.push_back(f(c));
  Pushforward<To> out{Polynomial<To>(std::move(image)), false};
  std::size_t source_size = coeffs.size();
  out.degree_dropped = out.image.coeffs().size() != source_size;
  return out;
}

}  // namespace hyperfact
