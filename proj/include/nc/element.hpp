#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

#include "nc/carrier.hpp"
#include "nc/rat.hpp"

namespace nc {

// Coordinate slots.
inline constexpr int RE = 0, IM = 1, NEUT = 2, IMNEUT = 3;

// Element of a modular carrier; coordinates are canonical residues in [0, n-1].
// Default comparison is lexicographic over (re, im, neut, imneut), which is the
// single global enumeration order used for every output.
struct ModElem {
  std::array<long long, 4> c{};
  auto operator<=>(const ModElem&) const = default;
};

// Element of the exact carrier; coordinates are arbitrary-precision rationals.
struct ExactElem {
  std::array<Rat, 4> c{};
  bool operator==(const ExactElem& o) const { return c == o.c; }
  bool operator!=(const ExactElem& o) const { return !(*this == o); }
  // Lexicographic (re, im, neut, imneut); used only to order result lists.
  bool operator<(const ExactElem& o) const { return c < o.c; }
};

// Basis multiplication table derived from the defining relations
//   u^2 = e,  I^2 = I,  u*I = I*u = uI,  u*uI = e*I,  I*uI = uI,  (uI)^2 = e*I
// for basis order (1, u, I, uI). table[i][j][k] is the k-coordinate of b_i*b_j,
// with the coefficient e encoded as +1 entries in `ecoef` (so callers can
// substitute e = n-1 or e = -1). All entries are 0/1.
struct BasisTable {
  // plain[i][j][k]: coefficient of b_k in b_i*b_j that does NOT carry a factor e
  // ecoef[i][j][k]: coefficient of b_k that DOES carry a factor e
  int plain[4][4][4] = {};
  int ecoef[4][4][4] = {};
};
const BasisTable& basis_table();

// Arithmetic context for one modular carrier.
class ModRing {
 public:
  using Elem = ModElem;

  explicit ModRing(const Carrier& car);

  const Carrier& carrier() const { return car_; }
  long long modulus() const { return n_; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return Elem{{1 % n_, 0, 0, 0}}; }
  // Reduces mod n and checks the family's coordinate shape.
  Elem make(long long re, long long im = 0, long long neut = 0, long long imneut = 0) const;
  // k as a real scalar.
  Elem scalar(long long k) const { return Elem{{mod(k), 0, 0, 0}}; }

  bool is_zero(const Elem& x) const { return x == Elem{}; }
  bool is_one(const Elem& x) const { return x == one(); }

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  // Generic bilinear expansion over basis_table(); must agree with mul everywhere
  // (asserted at construction on samples and exhaustively in tests).
  Elem mul_via_table(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, unsigned long long k) const;
  // (a, b, c, d) -> (a, (n-1)b, c, (n-1)d); involutive ring automorphism.
  Elem conj(const Elem& x) const;

  // Inverse via the k x k left-multiplication matrix over Z_n on the family's
  // active coordinates, solved by adjugate; verified by re-multiplication.
  std::optional<Elem> inverse(const Elem& x) const;
  bool is_unit(const Elem& x) const;

  long long mod(long long v) const {
    long long r = v % n_;
    return r < 0 ? r + n_ : r;
  }

 private:
  Carrier car_;
  long long n_ = 0;
  long long e_ = 0;  // u^2 = n-1

  long long mulmod(long long a, long long b) const {
    return (long long)((unsigned __int128)a * (unsigned __int128)b % (unsigned __int128)n_);
  }
  long long addmod(long long a, long long b) const {
    long long s = a + b;
    return s >= n_ ? s - n_ : s;
  }
};

// Arithmetic for the exact carrier (u = i, e = -1).
class ExactRing {
 public:
  using Elem = ExactElem;

  ExactRing() : car_(Carrier{Family::ExactNC, 0}) {}
  explicit ExactRing(const Carrier& car);

  const Carrier& carrier() const { return car_; }

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem make(Rat re, Rat im = 0, Rat neut = 0, Rat imneut = 0) const;
  Elem scalar(long long k) const { return make(Rat(static_cast<long>(k))); }

  bool is_zero(const Elem& x) const { return x == Elem{}; }
  bool is_one(const Elem& x) const { return x == one(); }

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem mul_via_table(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, unsigned long long k) const;
  // i -> -i: (a, b, c, d) -> (a, -b, c, -d).
  Elem conj(const Elem& x) const;

  // Absent exactly when the 4x4 left-multiplication system is singular over Q.
  std::optional<Elem> inverse(const Elem& x) const;
  bool is_unit(const Elem& x) const;

  // gcd of all eight integer coordinates; 0 only when both elements are 0.
  // Throws DomainError on non-integer coordinates.
  Int content_gcd(const Elem& x, const Elem& y) const;

  // Coordinatewise residue map onto a modular carrier; a surjective ring
  // homomorphism on integer 4-tuples. Throws DomainError on non-integer
  // coordinates and ShapeError if a nonzero coordinate has no slot in the
  // target family.
  ModElem reduce_mod(const Elem& x, const ModRing& target) const;

 private:
  Carrier car_;
};

// Coordinate-identity embedding between modular carriers of equal modulus
// where `from`'s coordinate set is contained in `to`'s (e.g. Z_p into C(Z_p)).
// Throws DomainError when the carriers are not nested that way.
ModElem embed_elem(const Carrier& from, const Carrier& to, const ModElem& x);

}  // namespace nc
