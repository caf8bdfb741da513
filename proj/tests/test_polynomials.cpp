#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "doctest.h"
#include "nc/format.hpp"
#include "nc/poly.hpp"

using namespace nc;

namespace {

Carrier mc(long long n) { return make_carrier(Family::ModComplex, n); }
Carrier mp(long long n) { return make_carrier(Family::ModPlain, n); }
Carrier mnc(long long n) { return make_carrier(Family::ModNeutroComplex, n); }

Poly<ModRing> poly_of(const ModRing& r, const std::vector<std::string>& coeffs) {
  std::vector<ModElem> c;
  for (const auto& s : coeffs) c.push_back(parse_mod(r.carrier(), s));
  return Poly<ModRing>(r, std::move(c));
}

Poly<ModRing> random_poly(const ModRing& r, int deg, std::mt19937_64& rng) {
  const unsigned long long n = (unsigned long long)r.modulus();
  std::vector<ModElem> c;
  for (int i = 0; i <= deg; ++i)
    c.push_back(r.make((long long)(rng() % n), (long long)(rng() % n), 0, 0));
  return Poly<ModRing>(r, std::move(c));
}

}  // namespace

TEST_CASE("worked product over C(Z_3) against an independent convolution") {
  ModRing r3(mc(3));
  // p = (2+iF) + (1+2iF)x + (2+2iF)x^7 ;  q = iF + (2+iF)x^3 + 2x^6
  std::vector<ModElem> pc(8, r3.zero()), qc(7, r3.zero());
  pc[0] = r3.make(2, 1);
  pc[1] = r3.make(1, 2);
  pc[7] = r3.make(2, 2);
  qc[0] = r3.make(0, 1);
  qc[3] = r3.make(2, 1);
  qc[6] = r3.make(2, 0);
  Poly<ModRing> p(r3, pc), q(r3, qc);
  auto prod = poly_mul(p, q);

  // frozen coefficients (x^7 terms cancel)
  CHECK(prod.deg() == 13);
  CHECK(prod.coeff(0) == r3.make(2, 2));
  CHECK(prod.coeff(1) == r3.make(1, 1));
  CHECK(prod.coeff(2) == r3.zero());
  CHECK(prod.coeff(3) == r3.make(0, 1));
  CHECK(prod.coeff(4) == r3.make(0, 2));
  CHECK(prod.coeff(6) == r3.make(1, 2));
  CHECK(prod.coeff(7) == r3.zero());
  CHECK(prod.coeff(10) == r3.make(2, 0));
  CHECK(prod.coeff(13) == r3.make(1, 1));

  // independent oracle: index-map convolution without poly_mul
  std::map<int, ModElem> sparse_p{{0, pc[0]}, {1, pc[1]}, {7, pc[7]}};
  std::map<int, ModElem> sparse_q{{0, qc[0]}, {3, qc[3]}, {6, qc[6]}};
  std::map<int, ModElem> conv;
  for (const auto& [i, a] : sparse_p)
    for (const auto& [j, b] : sparse_q) {
      auto it = conv.find(i + j);
      ModElem term = r3.mul(a, b);
      if (it == conv.end())
        conv[i + j] = term;
      else
        it->second = r3.add(it->second, term);
    }
  for (int k = 0; k <= 13; ++k) {
    ModElem want = conv.count(k) ? conv[k] : r3.zero();
    CHECK(prod.coeff(k) == want);
  }
}

TEST_CASE("basic arithmetic and normalization") {
  ModRing r2(mc(2));
  auto xp1 = poly_of(r2, {"1", "1"});
  CHECK(poly_mul(xp1, xp1) == poly_of(r2, {"1", "0", "1"}));  // (x+1)^2 = x^2+1

  ModRing r3(mc(3));
  auto p = poly_of(r3, {"1+2iF", "2"});
  CHECK(poly_mul(p, Poly<ModRing>(r3)).is_zero());
  CHECK(poly_add(p, poly_neg(p)).is_zero());

  // trailing zeros are stripped; degree of zero is the -1 sentinel
  Poly<ModRing> z(r3, {r3.zero(), r3.zero()});
  CHECK(z.is_zero());
  CHECK(z.deg() == -1);
  CHECK_THROWS_AS(z.leading(), DomainError);

  // degree may collapse over zero-divisor carriers: I * (1+I) = 2I = 0 mod 2
  ModRing rn(mnc(2));
  Poly<ModRing> a(rn, {rn.zero(), rn.make(0, 0, 1)});       // I x
  Poly<ModRing> b(rn, {rn.zero(), rn.make(1, 0, 1)});       // (1+I) x
  CHECK(a.deg() == 1);
  CHECK(b.deg() == 1);
  CHECK(poly_mul(a, b).is_zero());

  // degree is additive over an integral-domain carrier
  ModRing r7(mc(7));
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 200; ++t) {
    auto f = random_poly(r7, 1 + (int)(rng() % 3), rng);
    auto g = random_poly(r7, 1 + (int)(rng() % 3), rng);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(poly_mul(f, g).deg() == f.deg() + g.deg());
  }
}

TEST_CASE("evaluation") {
  ModRing r3(mc(3));
  auto p = poly_of(r3, {"1", "0", "1"});  // x^2 + 1
  CHECK(r3.is_zero(poly_eval(p, r3.make(0, 1))));
  CHECK(poly_eval(p, r3.zero()) == r3.one());

  std::mt19937_64 rng(6021);
  ModRing r7(mc(7));
  for (int t = 0; t < 1000; ++t) {
    auto f = random_poly(r7, (int)(rng() % 5), rng);
    ModElem x = r7.make((long long)(rng() % 7), (long long)(rng() % 7));
    // naive power-sum oracle
    ModElem want = r7.zero();
    for (int i = 0; i <= f.deg(); ++i)
      want = r7.add(want, r7.mul(f.coeff(i), r7.pow(x, (unsigned long long)i)));
    CHECK(poly_eval(f, x) == want);
  }
}

TEST_CASE("euclidean division") {
  ExactRing ex;
  Poly<ExactRing> num(ex, {ex.make(-2), ex.zero(), ex.one()});  // x^2 - 2
  Poly<ExactRing> den(ex, {ex.zero(), ex.one()});               // x
  auto [q, r] = poly_divmod(num, den);
  CHECK(q == Poly<ExactRing>(ex, {ex.zero(), ex.one()}));
  CHECK(r == Poly<ExactRing>::constant(ex, ex.make(-2)));

  ModRing r5(mc(5));
  auto [q5, r5r] = poly_divmod(poly_of(r5, {"4", "0", "1"}), poly_of(r5, {"1", "1"}));
  CHECK(q5 == poly_of(r5, {"4", "1"}));
  CHECK(r5r.is_zero());

  // recombination oracle, seeded
  ModRing r7(mc(7));
  std::mt19937_64 rng(321);
  for (int t = 0; t < 1000; ++t) {
    auto p = random_poly(r7, (int)(rng() % 6), rng);
    auto d = random_poly(r7, (int)(rng() % 3), rng);
    if (d.is_zero() || !r7.is_unit(d.leading())) continue;
    auto [qq, rr] = poly_divmod(p, d);
    CHECK(poly_add(poly_mul(d, qq), rr) == p);
    CHECK(rr.deg() < d.deg());
  }

  // divmod(p, d) returns the unique representation: build p from every (q, r)
  // with deg q <= 1, deg r < deg d over C(Z_3) and demand exact recovery
  ModRing r3(mc(3));
  Enumerator en(r3.carrier());
  std::vector<ModElem> elems;
  for (unsigned long long i = 0; i < en.size(); ++i) elems.push_back(en.at(i));
  int checked = 0;
  for (const ModElem& d1 : elems) {
    if (!r3.is_unit(d1)) continue;
    for (const ModElem& d0 : elems) {
      Poly<ModRing> d(r3, {d0, d1});
      for (const ModElem& q1 : elems)
        for (const ModElem& q0 : elems)
          for (const ModElem& rr : elems) {
            Poly<ModRing> qq(r3, {q0, q1});
            Poly<ModRing> p = poly_add(poly_mul(d, qq), Poly<ModRing>::constant(r3, rr));
            auto [gq, gr] = poly_divmod(p, d);
            CHECK(gq == qq);
            CHECK(gr == Poly<ModRing>::constant(r3, rr));
            ++checked;
          }
    }
  }
  CHECK(checked == 8 * 9 * 9 * 9 * 9);

  CHECK_THROWS_AS(poly_divmod(num, Poly<ExactRing>(ex)), DomainError);
  // leading coefficient I is a zero divisor, not a unit
  ModRing rn(mnc(3));
  Poly<ModRing> dI(rn, {rn.one(), rn.make(0, 0, 1)});
  CHECK_THROWS_AS(poly_divmod(poly_of(rn, {"1", "0", "1"}), dI), DomainError);
  ModRing rother(mc(7));
  CHECK_THROWS_AS(poly_divmod(poly_of(r5, {"1"}), poly_of(rother, {"1"})), MixedCarrierError);
}

TEST_CASE("roots over finite carriers") {
  ModRing r3(mc(3));
  auto roots = poly_roots(poly_of(r3, {"1", "0", "1"}));
  CHECK(roots == std::vector<ModElem>{r3.make(0, 1), r3.make(0, 2)});

  CHECK(poly_roots(Poly<ModRing>::constant(r3, r3.make(2, 0))).empty());

  // the zero polynomial vanishes everywhere
  CHECK(poly_roots(Poly<ModRing>(r3)).size() == 9);

  // root count <= degree over field carriers, exhaustive cubics over C(Z_3)
  {
    Enumerator en(r3.carrier());
    std::vector<ModElem> elems;
    for (unsigned long long i = 0; i < en.size(); ++i) elems.push_back(en.at(i));
    for (const ModElem& c3 : elems) {
      if (r3.is_zero(c3)) continue;
      for (const ModElem& c2 : elems)
        for (const ModElem& c1 : elems)
          for (const ModElem& c0 : elems) {
            Poly<ModRing> f(r3, {c0, c1, c2, c3});
            CHECK(poly_roots(f).size() <= 3);
          }
    }
  }
  // seeded spot checks over bigger field carriers
  std::mt19937_64 rng(777);
  for (long long p : {7, 11}) {
    ModRing r(mc(p));
    for (int t = 0; t < 50; ++t) {
      auto f = random_poly(r, 3, rng);
      if (f.is_zero()) continue;
      CHECK(poly_roots(f).size() <= (std::size_t)f.deg());
    }
  }
  // over a zero-divisor carrier the bound can break: x^2 = 0 over C(Z_4)
  ModRing r4(mc(4));
  CHECK(poly_roots(poly_of(r4, {"0", "0", "1"})).size() > 2);
}

TEST_CASE("exact root search within a window") {
  ExactRing ex;
  // x^2 - 2 has no integer-coordinate roots
  Poly<ExactRing> m2(ex, {ex.make(-2), ex.zero(), ex.one()});
  CHECK(poly_roots_exact(m2, 100).empty());

  // x^2 + 4: component-wise (2i choices) recombine into four roots
  Poly<ExactRing> p4(ex, {ex.make(4), ex.zero(), ex.one()});
  auto roots = poly_roots_exact(p4, 5);
  std::vector<ExactElem> want{ex.make(0, -2), ex.make(0, -2, 0, 4), ex.make(0, 2, 0, -4),
                              ex.make(0, 2)};
  CHECK(roots == want);
  for (const auto& r : roots) CHECK(ex.is_zero(poly_eval(p4, r)));

  // mixed-coordinate roots: (x - (1+I)) (x - 2)
  Poly<ExactRing> fac(ex, {ex.make(2, 0, 2), ex.make(-3, 0, -1), ex.one()});
  auto roots2 = poly_roots_exact(fac, 3);
  CHECK(roots2 == std::vector<ExactElem>{ex.make(1, 0, 1), ex.make(2)});

  // a root outside the window is not reported
  CHECK(poly_roots_exact(fac, 1).size() == 1);  // only 1+I fits |coords| <= 1

  CHECK_THROWS_AS(poly_roots_exact(Poly<ExactRing>(ex), 5), DomainError);
  CHECK_THROWS_AS(poly_roots_exact(m2, -1), DomainError);
  ScanBudget tiny;
  tiny.max_order = 10;
  CHECK_THROWS_AS(poly_roots_exact(m2, 100, tiny), BudgetError);
}

TEST_CASE("irreducibility over field carriers") {
  ModRing z3(mp(3));
  auto irr = poly_is_irreducible(poly_of(z3, {"1", "0", "1"}));
  CHECK(irr.irreducible);
  CHECK(!irr.factor.has_value());

  ModRing r3(mc(3));
  auto red = poly_is_irreducible(poly_of(r3, {"1", "0", "1"}));
  CHECK(!red.irreducible);
  REQUIRE(red.factor.has_value());
  CHECK(red.factor->deg() == 1);
  CHECK(poly_divmod(poly_of(r3, {"1", "0", "1"}), *red.factor).second.is_zero());

  CHECK(poly_is_irreducible(poly_of(z3, {"2", "1"})).irreducible);  // degree 1

  // degree 4, no roots but a quadratic factor: (x^2+1)^2 over Z_3
  auto sq = poly_is_irreducible(poly_of(z3, {"1", "0", "2", "0", "1"}));
  CHECK(!sq.irreducible);
  REQUIRE(sq.factor.has_value());
  CHECK(sq.factor->deg() == 2);
  CHECK(poly_divmod(poly_of(z3, {"1", "0", "2", "0", "1"}), *sq.factor).second.is_zero());

  // x^4+x^3+x^2+x+1 is irreducible over Z_3 (3 has order 4 mod 5)
  CHECK(poly_is_irreducible(poly_of(z3, {"1", "1", "1", "1", "1"})).irreducible);

  CHECK_THROWS_AS(poly_is_irreducible(poly_of(z3, {"1"})), DomainError);        // deg 0
  CHECK_THROWS_AS(poly_is_irreducible(poly_of(z3, {"1", "0", "0", "0", "0", "1"})),
                  DomainError);                                                 // deg 5
  ModRing r5(mc(5));
  CHECK_THROWS_AS(poly_is_irreducible(poly_of(r5, {"1", "0", "1"})), DomainError);
}

TEST_CASE("gcd over field carriers") {
  ModRing z5(mp(5));
  auto g = poly_gcd(poly_of(z5, {"4", "0", "1"}), poly_of(z5, {"4", "1"}));
  CHECK(g == poly_of(z5, {"4", "1"}));  // x - 1 = x + 4, monic

  ModRing r7(mc(7));
  auto p = poly_of(r7, {"3+iF", "2", "1"});
  auto gp = poly_gcd(p, Poly<ModRing>(r7));
  CHECK(gp.deg() == p.deg());
  CHECK(r7.is_one(gp.leading()));
  CHECK_THROWS_AS(poly_gcd(Poly<ModRing>(r7), Poly<ModRing>(r7)), DomainError);

  // construction oracle: gcd(a g, b g) = g for monic g and coprime a, b
  std::mt19937_64 rng(918);
  int built = 0;
  while (built < 200) {
    auto g1 = random_poly(r7, 1 + (int)(rng() % 2), rng);
    auto a = random_poly(r7, 1 + (int)(rng() % 2), rng);
    auto b = random_poly(r7, 1 + (int)(rng() % 2), rng);
    if (g1.is_zero() || a.is_zero() || b.is_zero()) continue;
    // normalize g monic
    auto lead_inv = r7.inverse(g1.leading());
    if (!lead_inv) continue;
    auto gm = poly_scalar_mul(*lead_inv, g1);
    if (poly_gcd(a, b).deg() != 0) continue;  // demand coprime
    CHECK(poly_gcd(poly_mul(a, gm), poly_mul(b, gm)) == gm);
    ++built;
  }

  // gcd divides both arguments and is monic
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(r7, (int)(rng() % 4), rng);
    auto b = random_poly(r7, (int)(rng() % 4), rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto d = poly_gcd(a, b);
    CHECK(r7.is_one(d.leading()));
    if (!a.is_zero()) CHECK(poly_divmod(a, d).second.is_zero());
    if (!b.is_zero()) CHECK(poly_divmod(b, d).second.is_zero());
  }

  ModRing r5(mc(5));
  CHECK_THROWS_AS(poly_gcd(poly_of(r5, {"1", "1"}), poly_of(r5, {"1"})), DomainError);
}
