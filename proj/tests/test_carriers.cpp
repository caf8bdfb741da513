#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "nc/enumerate.hpp"
#include "nc/format.hpp"
#include "nc/fuzzy.hpp"

using namespace nc;

namespace {

Carrier mc(long long n) { return make_carrier(Family::ModComplex, n); }
Carrier mn(long long n) { return make_carrier(Family::ModNeutro, n); }
Carrier mnc(long long n) { return make_carrier(Family::ModNeutroComplex, n); }
Carrier mp(long long n) { return make_carrier(Family::ModPlain, n); }

}  // namespace

TEST_CASE("carrier construction and order") {
  CHECK(carrier_order(mc(3)) == 9);
  CHECK(carrier_order(mnc(5)) == 625);
  CHECK(carrier_order(mp(12)) == 12);
  CHECK(carrier_order(mn(7)) == 49);
  CHECK_THROWS_AS(make_carrier(Family::ModComplex, 1), CarrierError);
  CHECK_THROWS_AS(make_carrier(Family::ModComplex, 0), CarrierError);
  CHECK_THROWS_AS(make_carrier(Family::ModComplex), CarrierError);
  CHECK_THROWS_AS(make_carrier(Family::ExactNC, 5), CarrierError);
  CHECK_NOTHROW(make_carrier(Family::ExactNC));
  CHECK_THROWS_AS(carrier_order(make_carrier(Family::ExactNC)), DomainError);

  // i_F^2 = n-1: 2 mod 3
  ModRing r3(mc(3));
  CHECK(r3.mul(r3.make(0, 1), r3.make(0, 1)) == r3.make(2, 0));

  CHECK(family_from_name("mod-neutro-complex") == Family::ModNeutroComplex);
  CHECK(family_from_name("exact") == Family::ExactNC);
  CHECK(!family_from_name("bogus"));
  CHECK(carrier_name(mc(7)) == "mod-complex(7)");
}

TEST_CASE("addition and negation frozen examples") {
  ModRing r12(mc(12));
  CHECK(r12.add(r12.make(7, 3), r12.make(2, 0)) == r12.make(9, 3));

  ModRing r2(mc(2));
  CHECK(r2.is_zero(r2.add(r2.make(1, 1), r2.make(1, 1))));

  ExactRing ex;
  CHECK(ex.add(ex.make(5, 0, 3), ex.make(7, 0, 5)) == ex.make(12, 0, 8));
  CHECK(ex.neg(ex.make(2, -3)) == ex.make(-2, 3));

  ModRing r11(mnc(11));
  CHECK(r11.neg(r11.make(3, 4, 6)) == r11.make(8, 7, 5));
  CHECK(r11.is_zero(r11.neg(r11.zero())));
  for (long long a = 0; a < 11; ++a) {
    ModElem x = r11.make(a, (a * 3) % 11, (a * 7) % 11, a);
    CHECK(r11.is_zero(r11.add(x, r11.neg(x))));
  }
}

TEST_CASE("multiplication frozen examples") {
  ModRing r2(mc(2));
  CHECK(r2.is_zero(r2.mul(r2.make(1, 1), r2.make(1, 1))));

  ModRing r7(mc(7));
  CHECK(r7.is_one(r7.mul(r7.make(3, 4), r7.make(6, 6))));

  ModRing r3(mc(3));
  CHECK(r3.mul(r3.make(1, 1), r3.make(1, 1)) == r3.make(0, 2));

  ModRing r5(mnc(5));
  CHECK(r5.is_zero(r5.mul(r5.make(0, 0, 1), r5.make(1, 0, 4))));
}

TEST_CASE("pow frozen examples") {
  for (long long n : {2, 3, 5, 7, 11, 12, 26}) {
    ModRing r(mc(n));
    CHECK(r.pow(r.make(1, 1), 2) == r.make(0, 2 % n));
  }
  ModRing r26(mc(26));
  CHECK(r26.is_zero(r26.pow(r26.make(13, 13), 2)));
  ModRing r7(mnc(7));
  CHECK(r7.is_one(r7.pow(r7.make(4, 2, 5, 6), 0)));
  // pow against repeated multiplication
  ModElem acc = r7.one();
  ModElem x = r7.make(3, 1, 4, 2);
  for (unsigned k = 0; k <= 8; ++k) {
    CHECK(r7.pow(x, k) == acc);
    acc = r7.mul(acc, x);
  }
}

TEST_CASE("conjugation") {
  ModRing r7(mc(7));
  ModElem x = r7.make(3, 4);
  CHECK(r7.conj(x) == r7.make(3, 3));
  CHECK(r7.mul(x, r7.conj(x)) == r7.make(4, 0));  // 9+16 = 25 = 4 mod 7
  ModRing r11(mc(11));
  CHECK(r11.conj(r11.make(5, 0)) == r11.make(5, 0));

  // involution + automorphism, exhaustive over C(Z_n) n <= 7 and NC n <= 3
  for (long long n = 2; n <= 7; ++n) {
    ModRing r(mc(n));
    Enumerator en(r.carrier());
    for (unsigned long long i = 0; i < en.size(); ++i) {
      ModElem a = en.at(i);
      CHECK(r.conj(r.conj(a)) == a);
      for (unsigned long long j = 0; j < en.size(); ++j) {
        ModElem b = en.at(j);
        CHECK(r.conj(r.add(a, b)) == r.add(r.conj(a), r.conj(b)));
        CHECK(r.conj(r.mul(a, b)) == r.mul(r.conj(a), r.conj(b)));
      }
    }
  }
  for (long long n = 2; n <= 3; ++n) {
    ModRing r(mnc(n));
    Enumerator en(r.carrier());
    for (unsigned long long i = 0; i < en.size(); ++i)
      for (unsigned long long j = 0; j < en.size(); ++j) {
        ModElem a = en.at(i), b = en.at(j);
        CHECK(r.conj(r.mul(a, b)) == r.mul(r.conj(a), r.conj(b)));
      }
  }

  ExactRing ex;
  CHECK(ex.conj(ex.make(2, -3, 4, 5)) == ex.make(2, 3, 4, -5));
}

TEST_CASE("inverse frozen examples and re-verification") {
  ModRing r7(mc(7));
  auto inv = r7.inverse(r7.make(3, 4));
  REQUIRE(inv.has_value());
  CHECK(*inv == r7.make(6, 6));

  ModRing r2(mc(2));
  CHECK(!r2.inverse(r2.make(1, 1)).has_value());
  CHECK(r2.inverse(r2.one()) == r2.one());

  // every claimed inverse multiplies back to 1; units of C(Z_12)
  ModRing r12(mc(12));
  Enumerator en(r12.carrier());
  int units = 0;
  for (unsigned long long i = 0; i < en.size(); ++i) {
    ModElem x = en.at(i);
    auto y = r12.inverse(x);
    if (y) {
      ++units;
      CHECK(r12.is_one(r12.mul(x, *y)));
      CHECK(r12.is_unit(x));
    } else {
      CHECK(!r12.is_unit(x));
    }
  }
  CHECK(units > 0);

  ExactRing ex;
  auto iv = ex.inverse(ex.make(0, 2));  // (2i)^-1 = -i/2
  REQUIRE(iv.has_value());
  CHECK(*iv == ex.make(0, Rat(-1, 2)));
  CHECK(!ex.inverse(ex.make(0, 0, 1)).has_value());   // I is a zero divisor
  CHECK(!ex.inverse(ex.zero()).has_value());
}

TEST_CASE("square and norm identities over all small n") {
  for (long long n = 2; n <= 50; ++n) {
    ModRing r(mc(n));
    for (long long a = 0; a < n; ++a) {
      // (a+a iF)^2 and (a+(n-a) iF)^2 are purely imaginary
      CHECK(r.pow(r.make(a, a), 2).c[RE] == 0);
      CHECK(r.pow(r.make(a, (n - a) % n), 2).c[RE] == 0);
      // ab = 0 mod n makes the square real
      for (long long b = 0; b < n; ++b)
        if ((a * b) % n == 0) CHECK(r.pow(r.make(a, b), 2).c[IM] == 0);
    }
  }
  // odd prime p: ((p+1)/2 (1+iF))^2 = ((p+1)/2) iF
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    ModRing r(mc(p));
    long long h = (p + 1) / 2;
    CHECK(r.pow(r.make(h, h), 2) == r.make(0, h));
  }
  ModRing r11(mc(11));
  CHECK(r11.pow(r11.make(5, 5), 2) == r11.make(0, 6));
  // C(Z_2p): (p + p iF)^2 = 0
  for (long long p : {3, 5, 7, 11, 13}) {
    ModRing r(mc(2 * p));
    CHECK(r.is_zero(r.pow(r.make(p, p), 2)));
  }
}

TEST_CASE("ring axioms, exhaustive small carriers") {
  auto axioms = [](const ModRing& r, const std::vector<ModElem>& elems) {
    const ModElem one = r.one();
    for (const ModElem& a : elems) {
      CHECK(r.mul(a, one) == a);
      CHECK(r.mul(one, a) == a);
      CHECK(r.add(a, r.zero()) == a);
      for (const ModElem& b : elems) {
        CHECK(r.add(a, b) == r.add(b, a));
        CHECK(r.mul(a, b) == r.mul(b, a));
        CHECK(r.mul(a, b) == r.mul_via_table(a, b));
        for (const ModElem& c : elems) {
          CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
          CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
          CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        }
      }
    }
  };
  for (long long n : {2, 3}) {
    ModRing r(mnc(n));
    Enumerator en(r.carrier());
    std::vector<ModElem> elems;
    for (unsigned long long i = 0; i < en.size(); ++i) elems.push_back(en.at(i));
    axioms(r, elems);
  }
  for (long long n = 2; n <= 7; ++n) {
    ModRing r(mc(n));
    Enumerator en(r.carrier());
    std::vector<ModElem> elems;
    for (unsigned long long i = 0; i < en.size(); ++i) elems.push_back(en.at(i));
    axioms(r, elems);
  }
}

TEST_CASE("ring axioms, seeded samples up to n = 50") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 10000; ++trial) {
    long long n = 2 + (long long)(rng() % 49);
    ModRing r(mnc(n));
    auto rnd = [&] {
      return r.make((long long)(rng() % (unsigned long long)n), (long long)(rng() % (unsigned long long)n),
                    (long long)(rng() % (unsigned long long)n), (long long)(rng() % (unsigned long long)n));
    };
    ModElem a = rnd(), b = rnd(), c = rnd();
    CHECK(r.add(a, b) == r.add(b, a));
    CHECK(r.mul(a, b) == r.mul(b, a));
    CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
    CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    CHECK(r.mul(a, b) == r.mul_via_table(a, b));
  }
}

TEST_CASE("exact ring axioms with rational coordinates") {
  ExactRing ex;
  std::mt19937_64 rng(77);
  auto rnd = [&] {
    auto q = [&] { return Rat((long)(rng() % 19) - 9, (long)(rng() % 7) + 1); };
    return ex.make(q(), q(), q(), q());
  };
  for (int t = 0; t < 500; ++t) {
    ExactElem a = rnd(), b = rnd(), c = rnd();
    CHECK(ex.mul(a, b) == ex.mul(b, a));
    CHECK(ex.mul(ex.mul(a, b), c) == ex.mul(a, ex.mul(b, c)));
    CHECK(ex.mul(a, ex.add(b, c)) == ex.add(ex.mul(a, b), ex.mul(a, c)));
    CHECK(ex.mul(a, b) == ex.mul_via_table(a, b));
    auto inv = ex.inverse(a);
    if (inv) CHECK(ex.is_one(ex.mul(a, *inv)));
  }
  // i^2 = -1, I^2 = I, (iI)^2 = -I
  CHECK(ex.mul(ex.make(0, 1), ex.make(0, 1)) == ex.make(-1));
  CHECK(ex.mul(ex.make(0, 0, 1), ex.make(0, 0, 1)) == ex.make(0, 0, 1));
  CHECK(ex.mul(ex.make(0, 0, 0, 1), ex.make(0, 0, 0, 1)) == ex.make(0, 0, -1));
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  ExactRing ex;
  ModRing r2(mc(2));
  CHECK(r2.is_zero(ex.reduce_mod(ex.make(2, 2), r2)));
  ModRing r3(mn(3));
  CHECK(ex.reduce_mod(ex.make(5, 0, 3), r3) == r3.make(2, 0, 0));

  std::mt19937_64 rng(424242);
  for (int t = 0; t < 1000; ++t) {
    long long n = 2 + (long long)(rng() % 11);
    ModRing r(mnc(n));
    auto rnd = [&] {
      auto z = [&] { return Rat((long)(rng() % 41) - 20); };
      return ex.make(z(), z(), z(), z());
    };
    ExactElem x = rnd(), y = rnd();
    CHECK(ex.reduce_mod(ex.mul(x, y), r) == r.mul(ex.reduce_mod(x, r), ex.reduce_mod(y, r)));
    CHECK(ex.reduce_mod(ex.add(x, y), r) == r.add(ex.reduce_mod(x, r), ex.reduce_mod(y, r)));
  }

  CHECK_THROWS_AS(ex.reduce_mod(ex.make(Rat(1, 2)), r2), DomainError);
  // im coordinate has no slot in a mod-plain target
  ModRing rp(mp(5));
  CHECK_THROWS_AS(ex.reduce_mod(ex.make(1, 1), rp), ShapeError);
  CHECK(rp.make(1, 0) == ex.reduce_mod(ex.make(6, 5), rp));  // 5 = 0 mod 5 is fine
}

TEST_CASE("content gcd") {
  ExactRing ex;
  CHECK(ex.content_gcd(ex.make(3, 3, 6, 9), ex.make(24, 18, 12)) == 3);
  CHECK(ex.content_gcd(ex.make(5, 0, 3), ex.make(7, 0, 5)) == 1);
  CHECK(ex.content_gcd(ex.zero(), ex.zero()) == 0);
  CHECK(ex.content_gcd(ex.make(-4, 8), ex.zero()) == 4);
  CHECK_THROWS_AS(ex.content_gcd(ex.make(Rat(1, 3)), ex.zero()), DomainError);
}

TEST_CASE("fuzzy lattice") {
  auto f = [](double a, double b, double c, double d) {
    auto q = [](double v) { return Rat((long)(v * 1000), 1000L); };
    return fuzzy_make(q(a), q(b), q(c), q(d));
  };
  FuzzyNC x = f(0.7, 0.61, 0.23, 0.08);
  FuzzyNC y = f(0.9, 0.23, 0.193, 0.7);
  // true coordinatewise min: the I coordinate is min(0.23, 0.193) = 0.193
  CHECK(fuzzy_meet(x, y) == f(0.7, 0.23, 0.193, 0.08));
  CHECK(fuzzy_meet(x, x) == x);
  CHECK(fuzzy_join(x, y) == f(0.9, 0.61, 0.23, 0.7));

  std::mt19937_64 rng(1001);
  auto rnd = [&] {
    auto q = [&] { return Rat((long)(rng() % 1001), 1000L); };
    return fuzzy_make(q(), q(), q(), q());
  };
  for (int t = 0; t < 500; ++t) {
    FuzzyNC a = rnd(), b = rnd(), c = rnd();
    CHECK(fuzzy_meet(a, fuzzy_join(a, b)) == a);
    CHECK(fuzzy_join(a, fuzzy_meet(a, b)) == a);
    CHECK(fuzzy_meet(a, b) == fuzzy_meet(b, a));
    CHECK(fuzzy_meet(fuzzy_meet(a, b), c) == fuzzy_meet(a, fuzzy_meet(b, c)));
  }
  CHECK_THROWS_AS(fuzzy_make(Rat(3, 2)), DomainError);
  CHECK_THROWS_AS(fuzzy_make(Rat(-1, 2)), DomainError);
}

TEST_CASE("render and parse round-trip") {
  Carrier c3 = mc(3);
  ModRing r3(c3);
  CHECK(render(c3, r3.make(2, 2)) == "2+2iF");
  CHECK(render(c3, r3.make(0, 1)) == "iF");
  CHECK(render(c3, r3.zero()) == "0");
  Carrier n3 = mn(3);
  ModRing rn3(n3);
  CHECK(render(n3, rn3.make(1, 0, 2)) == "1+2I");
  Carrier nc3 = mnc(3);
  ModRing rnc3(nc3);
  CHECK(render(nc3, rnc3.make(1, 1, 2, 1)) == "1+iF+2I+iFI");
  CHECK(parse_mod(nc3, "1+iF+2I+iFI") == rnc3.make(1, 1, 2, 1));
  CHECK(parse_mod(c3, "5") == r3.make(2, 0));  // reduced into [0, n)

  // parse . render = id over every element of small carriers
  for (Family fam : {Family::ModPlain, Family::ModComplex, Family::ModNeutro,
                     Family::ModNeutroComplex}) {
    for (long long n : {2, 3, 5}) {
      Carrier car = make_carrier(fam, n);
      Enumerator en(car);
      for (unsigned long long i = 0; i < en.size(); ++i) {
        ModElem x = en.at(i);
        CHECK(parse_mod(car, render(car, x)) == x);
      }
    }
  }

  // grammar violations carry a position
  try {
    parse_mod(c3, "1+");  // dangling plus
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 2);
  }
  CHECK_THROWS_AS(parse_mod(c3, ""), ParseError);
  CHECK_THROWS_AS(parse_mod(c3, "1+1x"), ParseError);
  CHECK_THROWS_AS(parse_mod(c3, "iF+1"), ParseError);     // out of order
  CHECK_THROWS_AS(parse_mod(c3, "1+2I"), ParseError);     // I not in mod-complex
  CHECK_THROWS_AS(parse_mod(mp(7), "iF"), ParseError);    // iF not in mod-plain

  ExactRing ex;
  CHECK(render(ex.carrier(), ex.make(Rat(1, 2), -3, 0, Rat(2, 5))) == "1/2-3i+2/5iI");
  CHECK(parse_exact("1/2-3i+2/5iI") == ex.make(Rat(1, 2), -3, 0, Rat(2, 5)));
  CHECK(render(ex.carrier(), ex.make(-1)) == "-1");
  CHECK(parse_exact("-i+I") == ex.make(0, -1, 1));
  for (int t = 0; t < 200; ++t) {
    std::mt19937_64 rng(t);
    auto q = [&] { return Rat((long)(rng() % 21) - 10, (long)(rng() % 9) + 1); };
    ExactElem x = ex.make(q(), q(), q(), q());
    CHECK(parse_exact(render(ex.carrier(), x)) == x);
  }
}

TEST_CASE("mixed carriers are rejected") {
  CHECK_THROWS_AS(require_same(mc(5), mc(7)), MixedCarrierError);
  CHECK_THROWS_AS(require_same(mc(5), mn(5)), MixedCarrierError);
  CHECK_NOTHROW(require_same(mc(5), mc(5)));
}

TEST_CASE("element embedding between families") {
  ModRing rc(mc(5)), rnc(mnc(5));
  ModElem x = rc.make(2, 3);
  ModElem y = embed_elem(mc(5), mnc(5), x);
  CHECK(y == rnc.make(2, 3, 0, 0));
  // embeddings respect products
  ModElem a = rc.make(1, 4), b = rc.make(3, 2);
  CHECK(embed_elem(mc(5), mnc(5), rc.mul(a, b)) ==
        rnc.mul(embed_elem(mc(5), mnc(5), a), embed_elem(mc(5), mnc(5), b)));
  CHECK_THROWS_AS(embed_elem(mnc(5), mc(5), rnc.make(0, 0, 1, 0)), DomainError);
  CHECK_THROWS_AS(embed_elem(mc(5), mc(7), x), DomainError);
}

TEST_CASE("enumeration is the lexicographic bijection") {
  Enumerator en(mnc(3));
  CHECK(en.size() == 81);
  CHECK(en.at(0) == ModElem{});
  ModRing r(mnc(3));
  CHECK(en.at(1) == r.make(0, 0, 0, 1));  // last coordinate varies fastest
  CHECK(en.at(3) == r.make(0, 0, 1, 0));
  for (unsigned long long i = 0; i < en.size(); ++i) CHECK(en.index_of(en.at(i)) == i);
  CHECK_THROWS_AS(en.at(81), DomainError);
  CHECK_THROWS_AS(Enumerator(make_carrier(Family::ExactNC)), DomainError);
}
