#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nc/enumerate.hpp"

namespace nc {

struct ScanBudget {
  unsigned long long max_order = 1'000'000;     // elements a scan may enumerate
  unsigned long long max_pairs = 100'000'000;   // products a pair scan may form
};

struct Nilpotent {
  ModElem element;
  int index;  // least k >= 1 with element^k = 0
  bool operator==(const Nilpotent&) const = default;
};

struct ScanReport {
  Carrier carrier;
  unsigned long long order = 0;
  std::vector<std::pair<ModElem, ModElem>> zero_divisor_pairs;  // ordered pairs, x*y = 0
  std::vector<ModElem> units;
  std::vector<ModElem> idempotents;
  std::vector<Nilpotent> nilpotents;
  bool is_field = false;
  bool is_integral_domain = false;
  // Named examples backing the verdicts, e.g. {"zero_divisor", "(I)*(1+2I)=0"}.
  std::vector<std::pair<std::string, std::string>> witnesses;
};

// All ordered pairs (x, y), x != 0 != y, x*y = 0, in enumeration order.
// jobs > 1 splits the outer loop into chunks merged in order (byte-identical).
std::vector<std::pair<ModElem, ModElem>> find_zero_divisors(const Carrier& car,
                                                            const ScanBudget& budget = {},
                                                            int jobs = 1);
std::vector<ModElem> find_units(const Carrier& car, const ScanBudget& budget = {});
std::vector<ModElem> find_idempotents(const Carrier& car, const ScanBudget& budget = {});
std::vector<Nilpotent> find_nilpotents(const Carrier& car, const ScanBudget& budget = {});

// Plain double loop over all nonzero pairs with early exit; no unit filtering.
// Used to cross-check the field criterion.
bool has_zero_divisors_bruteforce(const Carrier& car, const ScanBudget& budget = {});

struct FieldVerdict {
  bool is_field = false;
  // A zero-divisor pair when not a field (and one exists at finite order).
  std::optional<std::pair<ModElem, ModElem>> witness;
};

// Fast paths: ModPlain -> primality; ModComplex prime p -> the sum-of-two-squares
// criterion (witness pair (a+b iF, b+a iF)); ModNeutro/ModNeutroComplex -> false
// with witness I*(1-I) = 0. Composite ModComplex falls back to brute force.
FieldVerdict is_field(const Carrier& car, const ScanBudget& budget = {});

// Cheap structural test used to gate division-based algorithms: Z_p for
// prime p, or C(Z_p) with p prime and p = 3 (mod 4). No enumeration.
bool is_field_carrier(const Carrier& car);

// Witness (a, b), a,b in [1, p-1], a^2 + b^2 = 0 (mod p), minimizing a^2 + b^2
// and then lexicographic; absent iff none exists (p = 3 mod 4).
std::optional<std::pair<long long, long long>> sum_two_squares_witness(long long p);

unsigned long long additive_order(const Carrier& car, const ModElem& x);
// Least k >= 1 with x^k = 1; absent when x is not a unit.
std::optional<unsigned long long> multiplicative_order(const Carrier& car, const ModElem& x,
                                                       const ScanBudget& budget = {});

enum class IdealSide { Left, Right, TwoSided };

struct CheckResult {
  bool ok = false;
  std::string reason;  // violated law when !ok, e.g. "left-absorb"
  std::pair<ModElem, ModElem> witness{};
};

// True iff subset is an additive subgroup absorbing ring multiplication on the
// requested side(s): Left means R*S within S, Right means S*R within S.
CheckResult check_ideal(const std::vector<ModElem>& subset, const Carrier& car, IdealSide side,
                        const ScanBudget& budget = {});
// Additive subgroup closed under internal multiplication.
CheckResult check_subring(const std::vector<ModElem>& subset, const Carrier& car,
                          const ScanBudget& budget = {});

struct SSemigroupResult {
  bool is_smarandache = false;
  std::vector<ModElem> witness_group;  // sorted; a proper subset forming a group
};

// Whether the multiplicative semigroup contains a proper subset that is a group.
// Witness preference: the largest of the unit group and the corner unit groups
// e*U(eRe) over idempotents e; singleton {1} only if nothing larger exists.
SSemigroupResult is_smarandache_semigroup(const Carrier& car, const ScanBudget& budget = {});

// All subfields obtained as the closure of {e, e*x} for idempotent local
// identities e and elements x, capped at size_cap elements, deduplicated and
// sorted (by size, then content).
std::vector<std::vector<ModElem>> find_subfields(const Carrier& car, std::size_t size_cap,
                                                 const ScanBudget& budget = {});

// Aggregate of the above; deterministic.
ScanReport scan(const Carrier& car, const ScanBudget& budget = {}, int jobs = 1);

}  // namespace nc
