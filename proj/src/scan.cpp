#include "nc/scan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "nc/format.hpp"

namespace nc {

namespace {

void check_order_budget(unsigned long long order, const ScanBudget& b) {
  if (order > b.max_order)
    throw BudgetError("carrier order " + std::to_string(order) + " exceeds budget " +
                      std::to_string(b.max_order) + " elements");
}

void check_pair_budget(unsigned long long products, const ScanBudget& b, const char* what) {
  if (products > b.max_pairs)
    throw BudgetError(std::string(what) + " needs " + std::to_string(products) +
                      " products, over budget " + std::to_string(b.max_pairs));
}

// Nonzero non-units in enumeration order; in a finite commutative ring these
// are exactly the elements that can appear in a zero-divisor pair.
std::vector<ModElem> zero_divisor_candidates(const ModRing& ring, const Enumerator& en) {
  std::vector<ModElem> cand;
  for (unsigned long long i = 1; i < en.size(); ++i) {
    ModElem x = en.at(i);
    if (!ring.is_unit(x)) cand.push_back(x);
  }
  return cand;
}

long long gcd_ll(long long a, long long b) {
  while (b) { long long t = a % b; a = b; b = t; }
  return a < 0 ? -a : a;
}

}  // namespace

std::vector<std::pair<ModElem, ModElem>> find_zero_divisors(const Carrier& car,
                                                            const ScanBudget& budget, int jobs) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);
  const std::vector<ModElem> cand = zero_divisor_candidates(ring, en);
  check_pair_budget((unsigned long long)cand.size() * cand.size(), budget, "zero-divisor pair scan");

  auto scan_range = [&](std::size_t lo, std::size_t hi,
                        std::vector<std::pair<ModElem, ModElem>>& out) {
    for (std::size_t i = lo; i < hi; ++i)
      for (const ModElem& y : cand)
        if (ring.is_zero(ring.mul(cand[i], y))) out.emplace_back(cand[i], y);
  };

  if (jobs <= 1 || cand.size() < 64) {
    std::vector<std::pair<ModElem, ModElem>> pairs;
    scan_range(0, cand.size(), pairs);
    return pairs;
  }

  const std::size_t chunks = std::min<std::size_t>((std::size_t)jobs, cand.size());
  std::vector<std::vector<std::pair<ModElem, ModElem>>> parts(chunks);
  std::vector<std::thread> workers;
  const std::size_t step = (cand.size() + chunks - 1) / chunks;
  for (std::size_t t = 0; t < chunks; ++t) {
    const std::size_t lo = t * step, hi = std::min(cand.size(), lo + step);
    workers.emplace_back([&, lo, hi, t] { scan_range(lo, hi, parts[t]); });
  }
  for (auto& w : workers) w.join();
  std::vector<std::pair<ModElem, ModElem>> pairs;
  for (auto& p : parts) pairs.insert(pairs.end(), p.begin(), p.end());
  return pairs;
}

std::vector<ModElem> find_units(const Carrier& car, const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);
  std::vector<ModElem> units;
  for (unsigned long long i = 1; i < en.size(); ++i) {
    ModElem x = en.at(i);
    if (ring.is_unit(x)) units.push_back(x);
  }
  return units;
}

std::vector<ModElem> find_idempotents(const Carrier& car, const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);
  std::vector<ModElem> idem;
  for (unsigned long long i = 1; i < en.size(); ++i) {  // 0 excluded by convention
    ModElem x = en.at(i);
    if (ring.mul(x, x) == x) idem.push_back(x);
  }
  return idem;
}

std::vector<Nilpotent> find_nilpotents(const Carrier& car, const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);

  // Nilpotency indices are bounded by 4*ceil(log2 n) + 4: modulo each prime
  // power p^e dividing n, the radical of the rank-<=4 algebra over F_p has
  // vanishing 4th power, so x^4 lies in pR and x^(4e) = 0.
  unsigned long long bound = 4;
  for (long long m = car.modulus; m > 1; m >>= 1) bound += 4;

  std::vector<Nilpotent> out;
  for (unsigned long long i = 1; i < en.size(); ++i) {
    ModElem x = en.at(i);
    if (!ring.is_zero(ring.pow(x, bound))) continue;
    // Least index by binary search: {k : x^k = 0} is upward closed.
    unsigned long long lo = 1, hi = bound;
    while (lo < hi) {
      unsigned long long mid = lo + (hi - lo) / 2;
      if (ring.is_zero(ring.pow(x, mid)))
        hi = mid;
      else
        lo = mid + 1;
    }
    out.push_back(Nilpotent{x, (int)lo});
  }
  return out;
}

bool has_zero_divisors_bruteforce(const Carrier& car, const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);
  check_pair_budget((en.size() - 1) * (en.size() - 1), budget, "zero-divisor existence scan");
  for (unsigned long long i = 1; i < en.size(); ++i) {
    ModElem x = en.at(i);
    for (unsigned long long j = 1; j < en.size(); ++j)
      if (ring.is_zero(ring.mul(x, en.at(j)))) return true;
  }
  return false;
}

std::optional<std::pair<long long, long long>> sum_two_squares_witness(long long p) {
  if (!is_prime(p)) throw DomainError("sum_two_squares_witness requires a prime");
  // Solutions of s^2 = -1 (mod p); a witness pair is (a, a*s). Minimize
  // a^2 + b^2 as integers, then lexicographic - this reproduces the Fermat
  // two-squares decomposition for p = 1 (mod 4).
  std::vector<long long> roots;
  for (long long s = 1; s < p; ++s)
    if ((s * s + 1) % p == 0) roots.push_back(s);
  if (roots.empty()) return std::nullopt;
  std::optional<std::pair<long long, long long>> best;
  auto better = [&](long long a, long long b) {
    if (!best) return true;
    const long long cur = a * a + b * b, old = best->first * best->first + best->second * best->second;
    if (cur != old) return cur < old;
    return std::pair(a, b) < *best;
  };
  for (long long a = 1; a < p; ++a)
    for (long long s : roots) {
      const long long b = (long long)((unsigned __int128)a * s % (unsigned __int128)p);
      if (b >= 1 && better(a, b)) best = {a, b};
    }
  return best;
}

FieldVerdict is_field(const Carrier& car, const ScanBudget& budget) {
  if (!car.is_modular())
    throw DomainError("field check needs a finite carrier");
  ModRing ring(car);
  const long long n = car.modulus;

  switch (car.family) {
    case Family::ModNeutro:
    case Family::ModNeutroComplex: {
      // I * (1 - I) = I - I = 0, always.
      return {false, std::pair(ring.make(0, 0, 1), ring.make(1, 0, n - 1))};
    }
    case Family::ModPlain: {
      if (is_prime(n)) return {true, std::nullopt};
      for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return {false, std::pair(ring.scalar(d), ring.scalar(n / d))};
      return {true, std::nullopt};  // unreachable
    }
    case Family::ModComplex: {
      if (is_prime(n)) {
        auto w = sum_two_squares_witness(n);
        if (!w) return {true, std::nullopt};
        // (a + b iF)(b + a iF) = ab*n + (a^2+b^2) iF = 0.
        return {false, std::pair(ring.make(w->first, w->second), ring.make(w->second, w->first))};
      }
      auto pairs_budget = budget;
      auto zd = find_zero_divisors(car, pairs_budget);
      if (zd.empty()) return {true, std::nullopt};
      return {false, zd.front()};
    }
    default:
      throw DomainError("field check is not defined for this family");
  }
}

bool is_field_carrier(const Carrier& car) {
  if (!car.is_modular()) return false;
  switch (car.family) {
    case Family::ModPlain:
      return is_prime(car.modulus);
    case Family::ModComplex:
      return is_prime(car.modulus) && car.modulus % 4 == 3;
    default:
      return false;  // I is always a proper idempotent
  }
}

unsigned long long additive_order(const Carrier& car, const ModElem& x) {
  if (!car.is_modular())
    throw DomainError("additive order needs a finite carrier");
  const long long n = car.modulus;
  unsigned long long ord = 1;
  for (int k = 0; k < 4; ++k) {
    if (x.c[k] == 0) continue;
    const unsigned long long ok = (unsigned long long)(n / gcd_ll(x.c[k], n));
    ord = std::lcm(ord, ok);
  }
  return ord;
}

std::optional<unsigned long long> multiplicative_order(const Carrier& car, const ModElem& x,
                                                       const ScanBudget& budget) {
  ModRing ring(car);
  check_order_budget(carrier_order(car), budget);
  if (!ring.is_unit(x)) return std::nullopt;
  ModElem y = x;
  unsigned long long k = 1;
  while (!ring.is_one(y)) {
    y = ring.mul(y, x);
    ++k;
  }
  return k;
}

namespace {

CheckResult additive_subgroup_check(const std::vector<ModElem>& subset, const ModRing& ring,
                                    const std::set<ModElem>& members) {
  if (subset.empty()) return {false, "empty", {}};
  for (const ModElem& a : subset)
    if (!members.count(ring.neg(a))) return {false, "negation", {a, a}};
  for (const ModElem& a : subset)
    for (const ModElem& b : subset)
      if (!members.count(ring.add(a, b))) return {false, "add-closure", {a, b}};
  return {true, "", {}};
}

void check_in_carrier(const std::vector<ModElem>& subset, const ModRing& ring) {
  for (const ModElem& a : subset) {
    // make() shape-checks and reduces; non-canonical coordinates would break
    // set-membership tests below, so reject them instead of reducing silently.
    if (ring.make(a.c[0], a.c[1], a.c[2], a.c[3]) != a)
      throw DomainError("subset element is not a canonical member of " +
                        carrier_name(ring.carrier()));
  }
}

}  // namespace

CheckResult check_ideal(const std::vector<ModElem>& subset, const Carrier& car, IdealSide side,
                        const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_in_carrier(subset, ring);
  std::set<ModElem> members(subset.begin(), subset.end());

  if (auto add = additive_subgroup_check(subset, ring, members); !add.ok) return add;

  check_pair_budget(en.size() * (unsigned long long)members.size() *
                        (side == IdealSide::TwoSided ? 2 : 1),
                    budget, "ideal absorption scan");
  const bool left = side != IdealSide::Right;    // absorb r*s
  const bool right = side != IdealSide::Left;    // absorb s*r
  for (unsigned long long i = 0; i < en.size(); ++i) {
    const ModElem r = en.at(i);
    for (const ModElem& s : members) {
      if (left && !members.count(ring.mul(r, s))) return {false, "left-absorb", {r, s}};
      if (right && !members.count(ring.mul(s, r))) return {false, "right-absorb", {s, r}};
    }
  }
  return {true, "", {}};
}

CheckResult check_subring(const std::vector<ModElem>& subset, const Carrier& car,
                          const ScanBudget& budget) {
  ModRing ring(car);
  check_in_carrier(subset, ring);
  std::set<ModElem> members(subset.begin(), subset.end());

  if (auto add = additive_subgroup_check(subset, ring, members); !add.ok) return add;

  check_pair_budget((unsigned long long)members.size() * members.size(), budget,
                    "subring closure scan");
  for (const ModElem& a : members)
    for (const ModElem& b : members)
      if (!members.count(ring.mul(a, b))) return {false, "mul-closure", {a, b}};
  return {true, "", {}};
}

SSemigroupResult is_smarandache_semigroup(const Carrier& car, const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);

  std::vector<std::vector<ModElem>> candidates;
  std::vector<ModElem> units = find_units(car, budget);
  if (!units.empty() && (unsigned long long)units.size() < en.size()) candidates.push_back(units);

  for (const ModElem& e : find_idempotents(car, budget)) {
    if (ring.is_one(e) || ring.is_zero(e)) continue;
    // Corner monoid e*R with identity e; its unit group is a group under mul.
    std::set<ModElem> corner;
    for (unsigned long long i = 0; i < en.size(); ++i) corner.insert(ring.mul(e, en.at(i)));
    check_pair_budget((unsigned long long)corner.size() * corner.size(), budget,
                      "corner unit scan");
    std::vector<ModElem> cunits;
    for (const ModElem& y : corner) {
      for (const ModElem& z : corner)
        if (ring.mul(y, z) == e) {
          cunits.push_back(y);
          break;
        }
    }
    if (!cunits.empty() && (unsigned long long)cunits.size() < en.size())
      candidates.push_back(std::move(cunits));
  }

  SSemigroupResult res;
  for (auto& g : candidates) {
    std::sort(g.begin(), g.end());
    if (g.size() > res.witness_group.size()) {
      res.witness_group = g;
      res.is_smarandache = true;
    }
  }
  return res;
}

std::vector<std::vector<ModElem>> find_subfields(const Carrier& car, std::size_t size_cap,
                                                 const ScanBudget& budget) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);
  if (size_cap < 2) return {};

  const std::vector<ModElem> idems = find_idempotents(car, budget);
  check_pair_budget((unsigned long long)idems.size() * en.size() * size_cap, budget,
                    "subfield closure scan");

  std::set<std::vector<ModElem>> found;
  for (const ModElem& e : idems) {
    if (ring.is_zero(e)) continue;
    for (unsigned long long i = 0; i < en.size(); ++i) {
      const ModElem gen = ring.mul(e, en.at(i));
      // Closure of {e, gen} under + and * with a hard size cap.
      std::set<ModElem> S{e, gen};
      bool grew = true, capped = false;
      while (grew && !capped) {
        grew = false;
        std::vector<ModElem> snapshot(S.begin(), S.end());
        for (const ModElem& a : snapshot) {
          for (const ModElem& b : snapshot) {
            for (const ModElem& v : {ring.add(a, b), ring.mul(a, b)}) {
              if (S.insert(v).second) {
                grew = true;
                if (S.size() > size_cap) {
                  capped = true;
                  break;
                }
              }
            }
            if (capped) break;
          }
          if (capped) break;
        }
      }
      if (capped) continue;

      // Field test with identity e: e acts as 1 and every nonzero member divides e.
      bool is_field_set = S.size() >= 2;
      for (const ModElem& y : S) {
        if (!is_field_set) break;
        if (ring.mul(e, y) != y) is_field_set = false;
      }
      if (is_field_set) {
        for (const ModElem& y : S) {
          if (ring.is_zero(y)) continue;
          bool inv = false;
          for (const ModElem& z : S)
            if (ring.mul(y, z) == e) {
              inv = true;
              break;
            }
          if (!inv) {
            is_field_set = false;
            break;
          }
        }
      }
      if (is_field_set && S.count(ring.zero()))
        found.insert(std::vector<ModElem>(S.begin(), S.end()));
    }
  }

  std::vector<std::vector<ModElem>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ScanReport scan(const Carrier& car, const ScanBudget& budget, int jobs) {
  ModRing ring(car);
  Enumerator en(car);
  check_order_budget(en.size(), budget);

  ScanReport rep;
  rep.carrier = car;
  rep.order = en.size();
  rep.zero_divisor_pairs = find_zero_divisors(car, budget, jobs);
  rep.units = find_units(car, budget);
  rep.idempotents = find_idempotents(car, budget);
  rep.nilpotents = find_nilpotents(car, budget);
  rep.is_integral_domain = rep.zero_divisor_pairs.empty();
  rep.is_field = rep.is_integral_domain && rep.units.size() == rep.order - 1;

  auto show = [&](const ModElem& x) { return render(car, x); };
  if (!rep.zero_divisor_pairs.empty()) {
    const auto& [x, y] = rep.zero_divisor_pairs.front();
    rep.witnesses.emplace_back("zero_divisor", "(" + show(x) + ")*(" + show(y) + ")=0");
  }
  if (!rep.units.empty()) {
    const ModElem& u = rep.units.front();
    rep.witnesses.emplace_back("unit", "(" + show(u) + ")*(" + show(*ring.inverse(u)) + ")=1");
  }
  if (!rep.idempotents.empty()) {
    // first nonzero idempotent if any, else 0
    ModElem pick = rep.idempotents.front();
    for (const ModElem& e : rep.idempotents)
      if (!ring.is_zero(e)) {
        pick = e;
        break;
      }
    rep.witnesses.emplace_back("idempotent", "(" + show(pick) + ")^2=" + show(pick));
  }
  if (!rep.nilpotents.empty()) {
    const Nilpotent& nl = rep.nilpotents.front();
    rep.witnesses.emplace_back(
        "nilpotent", "(" + show(nl.element) + ")^" + std::to_string(nl.index) + "=0");
  }

  // Cross-check the criterion path where it applies.
  if (car.family == Family::ModPlain || car.family == Family::ModComplex ||
      car.family == Family::ModNeutro || car.family == Family::ModNeutroComplex) {
    FieldVerdict fv = is_field(car, budget);
    if (fv.is_field != rep.is_field)
      throw std::logic_error("field criterion disagrees with exhaustive scan for " +
                             carrier_name(car));
  }
  return rep;
}

}  // namespace nc
