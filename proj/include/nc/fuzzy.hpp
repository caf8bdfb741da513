#pragma once

#include <array>

#include "nc/rat.hpp"

namespace nc {

// Fuzzy neutrosophic complex number: all four coordinates in [0, 1].
// Rational coordinates keep the lattice laws bit-exact.
struct FuzzyNC {
  std::array<Rat, 4> c{};
  bool operator==(const FuzzyNC& o) const { return c == o.c; }
};

// Throws DomainError when a coordinate falls outside [0, 1].
FuzzyNC fuzzy_make(Rat re, Rat im = 0, Rat neut = 0, Rat imneut = 0);

// Coordinatewise min / max; associative, commutative, idempotent.
FuzzyNC fuzzy_meet(const FuzzyNC& x, const FuzzyNC& y);
FuzzyNC fuzzy_join(const FuzzyNC& x, const FuzzyNC& y);

}  // namespace nc
