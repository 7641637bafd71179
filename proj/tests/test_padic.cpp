#include "doctest.h"
#include "pzeta/padic.hpp"
#include "test_util.hpp"

using namespace pzeta;
using testutil::padic_eq;

TEST_SUITE_BEGIN("padic");

TEST_CASE("from_rational canonical examples") {
  Padic z = Padic::from_rational(Rat(0), 5, 3);
  CHECK(z.is_zero());
  CHECK(z.abs_precision() == 3);

  Padic h = Padic::from_rational(Rat(-1, 2), 5, 2);
  CHECK(h.valuation() == 0);
  CHECK(h.unit() == 12);  // 2*12 == -1 mod 25
  CHECK(h.precision() == 2);

  Padic f = Padic::from_rational(Rat(1, 5), 5, 2);
  CHECK(f.valuation() == -1);
  CHECK(f.unit() == 1);
}

TEST_CASE("from_rational rejects bad parameters") {
  CHECK_THROWS_AS(Padic::from_rational(Rat(1), 4, 3), domain_error);
  CHECK_THROWS_AS(Padic::from_rational(Rat(1), 2, 3), domain_error);
  CHECK_THROWS_AS(Padic::from_rational(Rat(1), 9, 3), domain_error);
  CHECK_THROWS_AS(Padic::from_rational(Rat(1), 5, 0), domain_error);
}

TEST_CASE("arithmetic examples") {
  Padic two = Padic::from_integer(2, 5, 2);
  Padic three = Padic::from_integer(3, 5, 2);
  Padic s = two + three;
  CHECK(s.valuation() == 1);
  CHECK(s.unit() == 1);

  CHECK(two.inv().unit() == 13);  // 2*13 == 1 mod 25

  Padic a = Padic::from_rational(Rat(1, 5), 5, 4);
  Padic b = Padic::from_integer(5, 5, 4);
  Padic prod = a * b;
  CHECK(prod.valuation() == 0);
  CHECK(prod.unit() == 1);
}

TEST_CASE("mixed primes rejected") {
  Padic x = Padic::from_integer(1, 5, 3);
  Padic y = Padic::from_integer(1, 7, 3);
  CHECK_THROWS_AS(x + y, domain_error);
  CHECK_THROWS_AS(x * y, domain_error);
}

TEST_CASE("norm and valuation") {
  Padic f = Padic::from_rational(Rat(1, 5), 5, 3);
  CHECK(f.norm() == Rat(5));
  CHECK(f.valuation() == -1);

  Padic t = Padic::from_integer(10, 5, 3);
  CHECK(t.norm() == Rat(1, 5));
  CHECK(t.valuation() == 1);

  Padic u = Padic::from_integer(3, 5, 3);
  CHECK(u.norm() == Rat(1));
  CHECK(u.valuation() == 0);

  Padic z = Padic::zero(5, 4);
  CHECK(z.norm() == Rat(0));
  CHECK_THROWS_AS(z.valuation(), domain_error);
}

TEST_CASE("zero handling and precision loss") {
  Padic z = Padic::zero(5, 4);
  CHECK_THROWS_AS(z.inv(), precision_error);

  // cancellation produces an honest zero at the joint precision
  Padic x = Padic::from_integer(7, 5, 3);
  Padic d = x - Padic::from_integer(7, 5, 5);
  CHECK(d.is_zero());
  CHECK(d.abs_precision() == 3);
}

TEST_CASE("addition carries the min absolute precision") {
  Padic x = Padic::from_integer(1, 5, 2);
  Padic y = Padic::from_integer(1, 5, 6);
  CHECK((x + y).abs_precision() == 2);
  // multiplication carries the min relative precision
  Padic p = Padic::from_rational(Rat(1, 5), 5, 3) * Padic::from_integer(7, 5, 6);
  CHECK(p.precision() == 3);
}

TEST_CASE("formatting examples") {
  Padic f = Padic::from_rational(Rat(1, 5), 5, 1);
  CHECK(f.str() == "5^-1*(1) + O(5^0)");

  Padic seven = Padic::from_integer(7, 5, 2);
  CHECK(seven.str_compact() == "7 + O(5^2)");
  CHECK(seven.str() == "5^0*(2 + 1*5) + O(5^2)");
  CHECK(seven.str_colon() == "5:0:2,1");

  CHECK(Padic::zero(5, 3).str() == "O(5^3)");
}

TEST_CASE("parse round-trips") {
  Padic h = Padic::from_rational(Rat(-1, 2), 5, 4);
  for (const std::string& text : {h.str(), h.str_compact(), h.str_colon()}) {
    Padic back = Padic::parse(text, 5, 4);
    CHECK(back.valuation() == h.valuation());
    CHECK(back.precision() == h.precision());
    CHECK(back.unit() == h.unit());
    CHECK(back.digits() == h.digits());
  }
  Padic z = Padic::parse("O(5^3)", 5, 4);
  CHECK(z.is_zero());
  CHECK(z.abs_precision() == 3);

  // bare rationals embed at the requested precision
  Padic q = Padic::parse("-1/2", 5, 4);
  CHECK(padic_eq(q, h));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(Padic::parse("5^-1*(7) + O(5^0)", 5, 3), parse_error);  // digit 7 >= p
  CHECK_THROWS_AS(Padic::parse("3^0*(1) + O(3^1)", 5, 3), parse_error);   // prime mismatch
  CHECK_THROWS_AS(Padic::parse("1 + O(5^2) junk", 5, 3), parse_error);
  CHECK_THROWS_AS(Padic::parse("", 5, 3), parse_error);
  try {
    Padic::parse("5:0:9", 5, 3);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("ring laws on random operands") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 200; ++i) {
      Padic x = Padic::from_rational(rng.rational_q(p), p, 12);
      Padic y = Padic::from_rational(rng.rational_q(p), p, 12);
      Padic z = Padic::from_rational(rng.rational_q(p), p, 12);
      CHECK(padic_eq(x + y, y + x));
      CHECK(padic_eq(x * y, y * x));
      CHECK(padic_eq((x + y) + z, x + (y + z)));
      CHECK(padic_eq((x * y) * z, x * (y * z)));
      CHECK(padic_eq(x * (y + z), x * y + x * z));
      CHECK(padic_eq(x * x.inv(), Padic::from_integer(1, p, 12)));
    }
  }
}

TEST_CASE("ultrametric inequality") {
  testutil::Rng rng;
  for (int i = 0; i < 200; ++i) {
    Padic x = Padic::from_rational(rng.rational_q(5), 5, 10);
    Padic y = Padic::from_rational(rng.rational_q(5), 5, 10);
    Padic s = x + y;
    if (s.is_zero()) continue;
    long m = std::min(x.valuation(), y.valuation());
    CHECK(s.valuation() >= m);
    if (x.valuation() != y.valuation()) CHECK(s.valuation() == m);
  }
}

TEST_CASE("from_rational reduces to the modular residue") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 100; ++i) {
      Rat q = rng.rational_zp(p);
      if (q != 0 && *valuation_rat(q, p) < 0) continue;
      Padic x = Padic::from_rational(q, p, 8);
      for (long k = 1; k <= 8; ++k) {
        Int m = power_of(p, k);
        Int dinv;
        mpz_invert(dinv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t());
        Int want = q.get_num() * dinv % m;
        if (want < 0) want += m;
        CHECK(x.residue(k) == want);
      }
    }
  }
}

TEST_CASE("pow_int") {
  Padic x = Padic::from_rational(Rat(2, 5), 5, 8);
  CHECK(padic_eq(x.pow_int(3), x * x * x));
  CHECK(padic_eq(x.pow_int(-2), (x * x).inv()));
  CHECK(x.pow_int(0).unit() == 1);
  CHECK_THROWS_AS(Padic::zero(5, 3).pow_int(-1), precision_error);
}

TEST_SUITE_END();
