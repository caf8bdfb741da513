#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "nc/enumerate.hpp"
#include "nc/scan.hpp"

namespace nc {

// Dense univariate polynomial; coeffs_[i] is the x^i coefficient, no trailing
// zeros. deg() of the zero polynomial is -1 (the "-infinity" sentinel).
template <class R>
class Poly {
 public:
  using Elem = typename R::Elem;

  explicit Poly(const R& ring) : ring_(ring) {}
  Poly(const R& ring, std::vector<Elem> coeffs) : ring_(ring), c_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const R& ring, const Elem& v) { return Poly(ring, {v}); }
  // c0 + c1*x + ... from lowest degree.
  static Poly from_coeffs(const R& ring, std::vector<Elem> coeffs) {
    return Poly(ring, std::move(coeffs));
  }

  const R& ring() const { return ring_; }
  const Carrier& carrier() const { return ring_.carrier(); }
  int deg() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem coeff(int i) const {
    return (i >= 0 && i < (int)c_.size()) ? c_[i] : ring_.zero();
  }
  Elem leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return carrier() == o.carrier() && c_ == o.c_; }

 private:
  void normalize() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }
  R ring_;
  std::vector<Elem> c_;
};

namespace detail {
template <class R>
void require_same_poly(const Poly<R>& p, const Poly<R>& q) {
  require_same(p.carrier(), q.carrier());
}
}  // namespace detail

template <class R>
Poly<R> poly_add(const Poly<R>& p, const Poly<R>& q) {
  detail::require_same_poly(p, q);
  const R& ring = p.ring();
  std::vector<typename R::Elem> c(std::max(p.coeffs().size(), q.coeffs().size()), ring.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.add(p.coeff((int)i), q.coeff((int)i));
  return Poly<R>(ring, std::move(c));
}

template <class R>
Poly<R> poly_neg(const Poly<R>& p) {
  auto c = p.coeffs();
  for (auto& v : c) v = p.ring().neg(v);
  return Poly<R>(p.ring(), std::move(c));
}

template <class R>
Poly<R> poly_sub(const Poly<R>& p, const Poly<R>& q) {
  return poly_add(p, poly_neg(q));
}

template <class R>
Poly<R> poly_scalar_mul(const typename R::Elem& s, const Poly<R>& p) {
  auto c = p.coeffs();
  for (auto& v : c) v = p.ring().mul(s, v);
  return Poly<R>(p.ring(), std::move(c));
}

// Cauchy-product convolution. Degree may drop below deg p + deg q over
// zero-divisor carriers; normalization handles that.
template <class R>
Poly<R> poly_mul(const Poly<R>& p, const Poly<R>& q) {
  detail::require_same_poly(p, q);
  const R& ring = p.ring();
  if (p.is_zero() || q.is_zero()) return Poly<R>(ring);
  std::vector<typename R::Elem> c((std::size_t)(p.deg() + q.deg() + 1), ring.zero());
  for (int i = 0; i <= p.deg(); ++i) {
    if (ring.is_zero(p.coeff(i))) continue;
    for (int j = 0; j <= q.deg(); ++j)
      c[(std::size_t)(i + j)] = ring.add(c[(std::size_t)(i + j)], ring.mul(p.coeff(i), q.coeff(j)));
  }
  return Poly<R>(ring, std::move(c));
}

// Horner scheme.
template <class R>
typename R::Elem poly_eval(const Poly<R>& p, const typename R::Elem& x) {
  const R& ring = p.ring();
  typename R::Elem acc = ring.zero();
  for (int i = p.deg(); i >= 0; --i) acc = ring.add(ring.mul(acc, x), p.coeff(i));
  return acc;
}

// Euclidean division: p = d*q + r with deg r < deg d. Requires the leading
// coefficient of d to be a unit.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const Poly<R>& p, const Poly<R>& d) {
  detail::require_same_poly(p, d);
  const R& ring = p.ring();
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  auto lead_inv = ring.inverse(d.leading());
  if (!lead_inv)
    throw DomainError("divisor's leading coefficient is not a unit");
  std::vector<typename R::Elem> rem = p.coeffs();
  const int dd = d.deg();
  if (p.deg() < dd) return {Poly<R>(ring), p};
  std::vector<typename R::Elem> quot((std::size_t)(p.deg() - dd + 1), ring.zero());
  for (int k = p.deg() - dd; k >= 0; --k) {
    auto factor = ring.mul(rem[(std::size_t)(k + dd)], *lead_inv);
    quot[(std::size_t)k] = factor;
    if (ring.is_zero(factor)) continue;
    for (int i = 0; i <= dd; ++i)
      rem[(std::size_t)(k + i)] =
          ring.sub(rem[(std::size_t)(k + i)], ring.mul(factor, d.coeff(i)));
  }
  return {Poly<R>(ring, std::move(quot)), Poly<R>(ring, std::move(rem))};
}

// All roots by exhaustive evaluation, in enumeration order. The zero
// polynomial vanishes everywhere, so every element is returned for it.
std::vector<ModElem> poly_roots(const Poly<ModRing>& p, const ScanBudget& budget = {});

// Roots of an exact polynomial whose four coordinates are integers in
// [-bound, bound]. Splits along the idempotent decomposition x ~ (x mod I,
// x mod (1-I)) into two Gaussian root searches and recombines.
std::vector<ExactElem> poly_roots_exact(const Poly<ExactRing>& p, long long bound,
                                        const ScanBudget& budget = {});

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<Poly<ModRing>> factor;  // a proper monic divisor when reducible
};

// Field carriers, degree 1..4. Degrees 2-3 reduce iff they have a root;
// degree 4 additionally searches monic quadratic divisors exhaustively.
IrreducibilityResult poly_is_irreducible(const Poly<ModRing>& p, const ScanBudget& budget = {});

// Monic gcd by the Euclidean algorithm over a field carrier.
Poly<ModRing> poly_gcd(const Poly<ModRing>& p, const Poly<ModRing>& q,
                       const ScanBudget& budget = {});

}  // namespace nc
