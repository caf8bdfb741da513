#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nc/error.hpp"

namespace nc {

// The five number systems. A 4-tuple (re, im, neut, imneut) represents
// re + im*u + neut*I + imneut*u*I, where u = i (exact, u^2 = -1) or
// u = i_F (modular, u^2 = n-1), and I is the idempotent indeterminate, I^2 = I.
enum class Family { ExactNC, ModPlain, ModComplex, ModNeutro, ModNeutroComplex };

// Which of the four coordinate slots a family uses.
// bit0 = re, bit1 = im, bit2 = neut, bit3 = imneut.
constexpr unsigned family_mask(Family f) {
  switch (f) {
    case Family::ModPlain: return 0b0001u;
    case Family::ModComplex: return 0b0011u;
    case Family::ModNeutro: return 0b0101u;
    default: return 0b1111u;  // ModNeutroComplex, ExactNC
  }
}

constexpr int family_coords(Family f) {
  unsigned m = family_mask(f);
  int k = 0;
  for (; m; m >>= 1) k += int(m & 1u);
  return k;
}

struct Carrier {
  Family family = Family::ExactNC;
  long long modulus = 0;  // 0 for the exact family

  bool is_modular() const { return family != Family::ExactNC; }
  unsigned mask() const { return family_mask(family); }
  int coords() const { return family_coords(family); }
  bool operator==(const Carrier&) const = default;
};

// Validates and builds a descriptor. Modular families require modulus >= 2;
// the exact family rejects any modulus.
Carrier make_carrier(Family family, std::optional<long long> modulus = std::nullopt);

// n^k for a modular carrier; throws DomainError for the exact (infinite) family
// and BudgetError if n^k overflows 64 bits.
unsigned long long carrier_order(const Carrier& c);

std::string family_name(Family f);  // "exact", "mod-plain", "mod-complex", ...
std::optional<Family> family_from_name(std::string_view name);
std::string carrier_name(const Carrier& c);  // e.g. "mod-complex(7)"

// Throws MixedCarrierError unless the descriptors are equal.
void require_same(const Carrier& a, const Carrier& b);

bool is_prime(long long n);

}  // namespace nc
