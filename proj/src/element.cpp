#include "nc/element.hpp"

#include <stdexcept>

#include "nc/format.hpp"

namespace nc {

namespace {

// b_i * b_j for basis (1, u, I, uI). Cross-products follow from u*I = uI and
// associativity/commutativity; e = u^2 stays symbolic.
BasisTable build_table() {
  BasisTable t;
  auto plain = [&](int i, int j, int k) { t.plain[i][j][k] = 1; t.plain[j][i][k] = 1; };
  auto ecoef = [&](int i, int j, int k) { t.ecoef[i][j][k] = 1; t.ecoef[j][i][k] = 1; };
  for (int j = 0; j < 4; ++j) plain(0, j, j);  // 1 * b_j = b_j
  ecoef(IM, IM, RE);                           // u*u = e
  plain(IM, NEUT, IMNEUT);                     // u*I = uI
  ecoef(IM, IMNEUT, NEUT);                     // u*uI = e*I
  plain(NEUT, NEUT, NEUT);                     // I*I = I
  plain(NEUT, IMNEUT, IMNEUT);                 // I*uI = uI
  ecoef(IMNEUT, IMNEUT, NEUT);                 // uI*uI = e*I
  return t;
}

}  // namespace

const BasisTable& basis_table() {
  static const BasisTable t = build_table();
  return t;
}

ModRing::ModRing(const Carrier& car) : car_(car) {
  if (!car.is_modular())
    throw CarrierError("ModRing requires a modular carrier");
  if (car.modulus < 2)
    throw CarrierError("modulus must be >= 2");
  n_ = car.modulus;
  e_ = n_ - 1;
  // Self-consistency: the closed product formula must agree with bilinear
  // expansion over the relation-derived basis table (exhaustive in tests).
  // Probe coordinates outside the family's slots are dropped.
  const unsigned m = car.mask();
  auto probe = [&](long long a, long long b, long long c, long long d) {
    return Elem{{(m & 1u) ? mod(a) : 0, (m >> 1 & 1u) ? mod(b) : 0, (m >> 2 & 1u) ? mod(c) : 0,
                 (m >> 3 & 1u) ? mod(d) : 0}};
  };
  const Elem probes[] = {one(), probe(1, 1, 1, 1), probe(2, 3, 5, 7), probe(0, 1, 0, 1)};
  for (const Elem& x : probes)
    for (const Elem& y : probes)
      if (mul(x, y) != mul_via_table(x, y))
        throw std::logic_error("basis table disagrees with product formula");
}

ModRing::Elem ModRing::make(long long re, long long im, long long neut, long long imneut) const {
  Elem x{{mod(re), mod(im), mod(neut), mod(imneut)}};
  const unsigned m = car_.mask();
  for (int k = 0; k < 4; ++k)
    if (x.c[k] != 0 && !(m >> k & 1u))
      throw ShapeError("coordinate " + std::to_string(k) + " not available in " + carrier_name(car_));
  return x;
}

ModRing::Elem ModRing::add(const Elem& x, const Elem& y) const {
  Elem z;
  for (int k = 0; k < 4; ++k) z.c[k] = addmod(x.c[k], y.c[k]);
  return z;
}

ModRing::Elem ModRing::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

ModRing::Elem ModRing::neg(const Elem& x) const {
  Elem z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] == 0 ? 0 : n_ - x.c[k];
  return z;
}

ModRing::Elem ModRing::mul(const Elem& x, const Elem& y) const {
  const long long x0 = x.c[0], x1 = x.c[1], x2 = x.c[2], x3 = x.c[3];
  const long long y0 = y.c[0], y1 = y.c[1], y2 = y.c[2], y3 = y.c[3];
  Elem z;
  z.c[RE] = addmod(mulmod(x0, y0), mulmod(e_, mulmod(x1, y1)));
  z.c[IM] = addmod(mulmod(x0, y1), mulmod(x1, y0));
  long long neut = addmod(addmod(mulmod(x0, y2), mulmod(x2, y0)), mulmod(x2, y2));
  long long neut_e = addmod(addmod(mulmod(x1, y3), mulmod(x3, y1)), mulmod(x3, y3));
  z.c[NEUT] = addmod(neut, mulmod(e_, neut_e));
  long long im2 = addmod(addmod(mulmod(x0, y3), mulmod(x3, y0)), addmod(mulmod(x1, y2), mulmod(x2, y1)));
  z.c[IMNEUT] = addmod(im2, addmod(mulmod(x2, y3), mulmod(x3, y2)));
  return z;
}

ModRing::Elem ModRing::mul_via_table(const Elem& x, const Elem& y) const {
  const BasisTable& t = basis_table();
  Elem z;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (y.c[j] == 0) continue;
      const long long xy = mulmod(x.c[i], y.c[j]);
      for (int k = 0; k < 4; ++k) {
        if (t.plain[i][j][k]) z.c[k] = addmod(z.c[k], xy);
        if (t.ecoef[i][j][k]) z.c[k] = addmod(z.c[k], mulmod(e_, xy));
      }
    }
  }
  return z;
}

ModRing::Elem ModRing::pow(const Elem& x, unsigned long long k) const {
  Elem acc = one(), base = x;
  while (k) {
    if (k & 1ull) acc = mul(acc, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return acc;
}

ModRing::Elem ModRing::conj(const Elem& x) const {
  Elem z = x;
  z.c[IM] = mulmod(e_, x.c[IM]);
  z.c[IMNEUT] = mulmod(e_, x.c[IMNEUT]);
  return z;
}

namespace {

// Determinant and adjugate-column solve for a small matrix over Z_n.
// L is k x k row-major. Cofactor expansion: exact for any n.
long long det_mod(const long long* L, int k, long long n) {
  auto mulm = [&](long long a, long long b) {
    return (long long)((unsigned __int128)a * (unsigned __int128)b % (unsigned __int128)n);
  };
  if (k == 1) return L[0] % n;
  if (k == 2) {
    long long d = mulm(L[0], L[3]) - mulm(L[1], L[2]);
    return ((d % n) + n) % n;
  }
  // general k via first-row expansion
  long long det = 0;
  std::array<long long, 16> minor{};
  for (int j = 0; j < k; ++j) {
    if (L[j] == 0) continue;
    int mi = 0;
    for (int r = 1; r < k; ++r)
      for (int c = 0; c < k; ++c)
        if (c != j) minor[mi++] = L[r * k + c];
    long long sub = det_mod(minor.data(), k - 1, n);
    long long term = mulm(L[j] % n, sub);
    det = (j % 2 == 0) ? (det + term) % n : ((det - term) % n + n) % n;
  }
  return det;
}

long long inv_mod_n(long long a, long long n) {
  // extended Euclid; requires gcd(a, n) == 1
  long long r0 = n, r1 = ((a % n) + n) % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  return ((s0 % n) + n) % n;
}

long long gcd_ll(long long a, long long b) {
  while (b) { long long t = a % b; a = b; b = t; }
  return a < 0 ? -a : a;
}

}  // namespace

std::optional<ModRing::Elem> ModRing::inverse(const Elem& x) const {
  // Active coordinate slots of this family.
  int slots[4], k = 0;
  for (int i = 0; i < 4; ++i)
    if (car_.mask() >> i & 1u) slots[k++] = i;

  // Left-multiplication matrix: column j = coordinates of x * b_{slots[j]}.
  long long L[16] = {};
  for (int j = 0; j < k; ++j) {
    Elem bj;
    bj.c[slots[j]] = 1;
    Elem col = mul(x, bj);
    for (int i = 0; i < k; ++i) L[i * k + j] = col.c[slots[i]];
  }

  const long long det = det_mod(L, k, n_);
  if (gcd_ll(det, n_) != 1) return std::nullopt;
  const long long dinv = inv_mod_n(det, n_);

  // y = det^{-1} * adj(L) * e1; adj(L)[j][0] = cofactor C[0][j].
  Elem y = zero();
  std::array<long long, 16> minor{};
  for (int j = 0; j < k; ++j) {
    long long cof;
    if (k == 1) {
      cof = 1;
    } else {
      int mi = 0;
      for (int r = 0; r < k; ++r) {
        if (r == 0) continue;
        for (int c = 0; c < k; ++c)
          if (c != j) minor[mi++] = L[r * k + c];
      }
      cof = det_mod(minor.data(), k - 1, n_);
      if (j % 2 == 1) cof = cof == 0 ? 0 : n_ - cof;
    }
    y.c[slots[j]] = mulmod(dinv, cof);
  }

  if (!is_one(mul(x, y)))
    throw std::logic_error("inverse verification failed");
  return y;
}

bool ModRing::is_unit(const Elem& x) const {
  int slots[4], k = 0;
  for (int i = 0; i < 4; ++i)
    if (car_.mask() >> i & 1u) slots[k++] = i;
  long long L[16] = {};
  for (int j = 0; j < k; ++j) {
    Elem bj;
    bj.c[slots[j]] = 1;
    Elem col = mul(x, bj);
    for (int i = 0; i < k; ++i) L[i * k + j] = col.c[slots[i]];
  }
  return gcd_ll(det_mod(L, k, n_), n_) == 1;
}

ExactRing::ExactRing(const Carrier& car) : car_(car) {
  if (car.is_modular())
    throw CarrierError("ExactRing requires the exact carrier");
}

ExactRing::Elem ExactRing::one() const {
  Elem x;
  x.c[RE] = 1;
  return x;
}

ExactRing::Elem ExactRing::make(Rat re, Rat im, Rat neut, Rat imneut) const {
  Elem x;
  x.c = {std::move(re), std::move(im), std::move(neut), std::move(imneut)};
  for (Rat& v : x.c) v.canonicalize();  // mpq_class(num, den) does not reduce
  return x;
}

ExactRing::Elem ExactRing::add(const Elem& x, const Elem& y) const {
  Elem z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] + y.c[k];
  return z;
}

ExactRing::Elem ExactRing::sub(const Elem& x, const Elem& y) const {
  Elem z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] - y.c[k];
  return z;
}

ExactRing::Elem ExactRing::neg(const Elem& x) const {
  Elem z;
  for (int k = 0; k < 4; ++k) z.c[k] = -x.c[k];
  return z;
}

ExactRing::Elem ExactRing::mul(const Elem& x, const Elem& y) const {
  const Rat &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
  const Rat &y0 = y.c[0], &y1 = y.c[1], &y2 = y.c[2], &y3 = y.c[3];
  Elem z;
  z.c[RE] = x0 * y0 - x1 * y1;
  z.c[IM] = x0 * y1 + x1 * y0;
  z.c[NEUT] = x0 * y2 + x2 * y0 + x2 * y2 - (x1 * y3 + x3 * y1 + x3 * y3);
  z.c[IMNEUT] = x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1 + x2 * y3 + x3 * y2;
  return z;
}

ExactRing::Elem ExactRing::mul_via_table(const Elem& x, const Elem& y) const {
  const BasisTable& t = basis_table();
  Elem z;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (y.c[j] == 0) continue;
      const Rat xy = x.c[i] * y.c[j];
      for (int k = 0; k < 4; ++k) {
        if (t.plain[i][j][k]) z.c[k] += xy;
        if (t.ecoef[i][j][k]) z.c[k] -= xy;  // e = -1
      }
    }
  }
  return z;
}

ExactRing::Elem ExactRing::pow(const Elem& x, unsigned long long k) const {
  Elem acc = one(), base = x;
  while (k) {
    if (k & 1ull) acc = mul(acc, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return acc;
}

ExactRing::Elem ExactRing::conj(const Elem& x) const {
  Elem z = x;
  z.c[IM] = -x.c[IM];
  z.c[IMNEUT] = -x.c[IMNEUT];
  return z;
}

namespace {

Rat det_rat(const Rat* L, int k) {
  if (k == 1) return L[0];
  if (k == 2) return L[0] * L[3] - L[1] * L[2];
  Rat det = 0;
  std::array<Rat, 16> minor;
  for (int j = 0; j < k; ++j) {
    if (L[j] == 0) continue;
    int mi = 0;
    for (int r = 1; r < k; ++r)
      for (int c = 0; c < k; ++c)
        if (c != j) minor[mi++] = L[r * k + c];
    Rat sub = det_rat(minor.data(), k - 1);
    if (j % 2 == 0)
      det += L[j] * sub;
    else
      det -= L[j] * sub;
  }
  return det;
}

}  // namespace

std::optional<ExactRing::Elem> ExactRing::inverse(const Elem& x) const {
  // 4x4 left-multiplication matrix over Q.
  std::array<Rat, 16> L;
  for (int j = 0; j < 4; ++j) {
    Elem bj;
    bj.c[j] = 1;
    Elem col = mul(x, bj);
    for (int i = 0; i < 4; ++i) L[i * 4 + j] = col.c[i];
  }
  const Rat det = det_rat(L.data(), 4);
  if (det == 0) return std::nullopt;

  Elem y;
  std::array<Rat, 16> minor;
  for (int j = 0; j < 4; ++j) {
    int mi = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != j) minor[mi++] = L[r * 4 + c];
    Rat cof = det_rat(minor.data(), 3);
    if (j % 2 == 1) cof = -cof;
    y.c[j] = cof / det;
  }
  if (!(mul(x, y) == one()))
    throw std::logic_error("inverse verification failed");
  return y;
}

bool ExactRing::is_unit(const Elem& x) const {
  std::array<Rat, 16> L;
  for (int j = 0; j < 4; ++j) {
    Elem bj;
    bj.c[j] = 1;
    Elem col = mul(x, bj);
    for (int i = 0; i < 4; ++i) L[i * 4 + j] = col.c[i];
  }
  return det_rat(L.data(), 4) != 0;
}

Int ExactRing::content_gcd(const Elem& x, const Elem& y) const {
  Int g = 0;
  for (const Elem* e : {&x, &y})
    for (int k = 0; k < 4; ++k) {
      if (!rat_is_integer(e->c[k]))
        throw DomainError("content gcd requires integer coordinates");
      Int v = e->c[k].get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  return g;
}

ModElem ExactRing::reduce_mod(const Elem& x, const ModRing& target) const {
  const long long n = target.modulus();
  long long coords[4];
  for (int k = 0; k < 4; ++k) {
    if (!rat_is_integer(x.c[k]))
      throw DomainError("reduce_mod requires integer coordinates");
    Int r = x.c[k].get_num() % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    coords[k] = r.get_si();
  }
  for (int k = 0; k < 4; ++k)
    if (coords[k] != 0 && !(target.carrier().mask() >> k & 1u))
      throw ShapeError("coordinate " + std::to_string(k) + " not available in " +
                       carrier_name(target.carrier()));
  return ModElem{{coords[0], coords[1], coords[2], coords[3]}};
}

ModElem embed_elem(const Carrier& from, const Carrier& to, const ModElem& x) {
  if (!from.is_modular() || !to.is_modular() || from.modulus != to.modulus ||
      (from.mask() & ~to.mask()) != 0)
    throw DomainError(carrier_name(from) + " does not embed into " + carrier_name(to));
  return x;  // canonical residues carry over unchanged
}

}  // namespace nc
