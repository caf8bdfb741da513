#include "nc/poly.hpp"

namespace nc {

std::vector<ModElem> poly_roots(const Poly<ModRing>& p, const ScanBudget& budget) {
  const Carrier car = p.carrier();
  const unsigned long long order = carrier_order(car);
  if (order > budget.max_order)
    throw BudgetError("root search over " + std::to_string(order) + " elements exceeds budget " +
                      std::to_string(budget.max_order));
  const ModRing& ring = p.ring();
  Enumerator en(car);
  std::vector<ModElem> roots;
  for (unsigned long long i = 0; i < en.size(); ++i) {
    ModElem x = en.at(i);
    if (ring.is_zero(poly_eval(p, x))) roots.push_back(x);
  }
  return roots;
}

namespace {

// The two ring maps onto the Gaussian component C(Q): pi1 kills I (c,d -> 0),
// pi2 evaluates I -> 1 (a+c, b+d). Both land in the i-only subring, which is
// closed under the 4-tuple product.
ExactElem pi1(const ExactRing& ring, const ExactElem& x) {
  return ring.make(x.c[RE], x.c[IM], 0, 0);
}
ExactElem pi2(const ExactRing& ring, const ExactElem& x) {
  return ring.make(x.c[RE] + x.c[NEUT], x.c[IM] + x.c[IMNEUT], 0, 0);
}

Poly<ExactRing> map_coeffs(const Poly<ExactRing>& p,
                           ExactElem (*f)(const ExactRing&, const ExactElem&)) {
  std::vector<ExactElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(f(p.ring(), v));
  return Poly<ExactRing>(p.ring(), std::move(c));
}

// Gaussian-integer roots of a component polynomial within |re|,|im| <= w.
// A zero component polynomial vanishes on the whole window.
std::vector<std::pair<long long, long long>> gaussian_window_roots(
    const Poly<ExactRing>& comp, long long w, const ScanBudget& budget,
    unsigned long long& eval_budget_used) {
  const ExactRing& ring = comp.ring();
  std::vector<std::pair<long long, long long>> roots;
  const unsigned long long cells = (unsigned long long)(2 * w + 1) * (unsigned long long)(2 * w + 1);
  eval_budget_used += cells;
  if (eval_budget_used > budget.max_order)
    throw BudgetError("exact root window of " + std::to_string(cells) +
                      " candidates exceeds budget " + std::to_string(budget.max_order));
  for (long long a = -w; a <= w; ++a)
    for (long long b = -w; b <= w; ++b) {
      if (comp.is_zero()) {
        roots.emplace_back(a, b);
        continue;
      }
      ExactElem x = ring.make(Rat(static_cast<long>(a)), Rat(static_cast<long>(b)), 0, 0);
      if (ring.is_zero(poly_eval(comp, x))) roots.emplace_back(a, b);
    }
  return roots;
}

}  // namespace

std::vector<ExactElem> poly_roots_exact(const Poly<ExactRing>& p, long long bound,
                                        const ScanBudget& budget) {
  if (p.carrier().is_modular())
    throw DomainError("exact root search needs the exact carrier");
  if (bound < 0) throw DomainError("root search bound must be non-negative");
  if (p.is_zero())
    throw DomainError("every element is a root of the zero polynomial");
  const ExactRing& ring = p.ring();

  // x is a root iff both components vanish: pi1(x) under pi1(p), pi2(x) under
  // pi2(p). pi1(x) lies in the |.| <= bound window and pi2(x) = pi1 + neut
  // part in the 2*bound window, so the two window searches are complete for
  // every root with all four coordinates in [-bound, bound].
  Poly<ExactRing> p1 = map_coeffs(p, &pi1);
  Poly<ExactRing> p2 = map_coeffs(p, &pi2);
  unsigned long long used = 0;
  auto r1 = gaussian_window_roots(p1, bound, budget, used);
  auto r2 = gaussian_window_roots(p2, 2 * bound, budget, used);

  const unsigned long long combos = (unsigned long long)r1.size() * r2.size();
  if (combos > budget.max_pairs)
    throw BudgetError("root recombination over " + std::to_string(combos) +
                      " pairs exceeds budget " + std::to_string(budget.max_pairs));

  std::vector<ExactElem> out;
  for (const auto& [w0, w1] : r1)
    for (const auto& [z0, z1] : r2) {
      const long long n0 = z0 - w0, n1 = z1 - w1;
      if (n0 < -bound || n0 > bound || n1 < -bound || n1 > bound) continue;
      ExactElem x = ring.make(Rat(static_cast<long>(w0)), Rat(static_cast<long>(w1)),
                              Rat(static_cast<long>(n0)), Rat(static_cast<long>(n1)));
      if (!ring.is_zero(poly_eval(p, x)))
        throw std::logic_error("recombined root failed re-verification");
      out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IrreducibilityResult poly_is_irreducible(const Poly<ModRing>& p, const ScanBudget& budget) {
  const Carrier car = p.carrier();
  if (!is_field_carrier(car))
    throw DomainError("irreducibility test needs a field carrier, got " + carrier_name(car));
  if (p.deg() < 1 || p.deg() > 4)
    throw DomainError("irreducibility test supports degrees 1..4, got degree " +
                      std::to_string(p.deg()));
  const ModRing& ring = p.ring();
  if (p.deg() == 1) return {true, std::nullopt};

  auto roots = poly_roots(p, budget);
  if (!roots.empty()) {
    // witness x - r, monic linear factor
    Poly<ModRing> lin(ring, {ring.neg(roots.front()), ring.one()});
    return {false, lin};
  }
  if (p.deg() <= 3) return {true, std::nullopt};

  // Degree 4, no roots: any factorization is quadratic x quadratic, and over a
  // field the factors can be taken monic.
  const unsigned long long order = carrier_order(car);
  if (order * order > budget.max_pairs)
    throw BudgetError("quadratic divisor search over " + std::to_string(order * order) +
                      " pairs exceeds budget " + std::to_string(budget.max_pairs));
  Enumerator en(car);
  for (unsigned long long bi = 0; bi < en.size(); ++bi)
    for (unsigned long long ci = 0; ci < en.size(); ++ci) {
      Poly<ModRing> d(ring, {en.at(ci), en.at(bi), ring.one()});
      auto [q, r] = poly_divmod(p, d);
      if (r.is_zero()) return {false, d};
    }
  return {true, std::nullopt};
}

Poly<ModRing> poly_gcd(const Poly<ModRing>& p, const Poly<ModRing>& q, const ScanBudget& budget) {
  (void)budget;
  detail::require_same_poly(p, q);
  const Carrier car = p.carrier();
  if (!is_field_carrier(car))
    throw DomainError("polynomial gcd needs a field carrier, got " + carrier_name(car));
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  const ModRing& ring = p.ring();
  Poly<ModRing> a = p, b = q;
  while (!b.is_zero()) {
    auto [dq, r] = poly_divmod(a, b);
    a = b;
    b = r;
  }
  auto lead_inv = ring.inverse(a.leading());
  if (!lead_inv) throw std::logic_error("gcd over a field has a unit leading coefficient");
  return poly_scalar_mul(*lead_inv, a);
}

}  // namespace nc
