#include "doctest.h"
#include "pzeta/functions.hpp"
#include "test_util.hpp"

using namespace pzeta;
using testutil::equals_rational;
using testutil::padic_eq;

TEST_SUITE_BEGIN("functions");

TEST_CASE("teichmuller values") {
  CHECK(teichmuller(Padic::from_integer(1, 5, 4)).unit() == 1);

  Padic w2 = teichmuller(Padic::from_integer(2, 5, 2));
  CHECK(w2.unit() == 7);  // 2^5 = 32 == 7, 7^5 == 7 mod 25

  Padic wm1 = teichmuller(Padic::from_integer(-1, 7, 3));
  CHECK(padic_eq(wm1, Padic::from_integer(-1, 7, 3)));

  CHECK_THROWS_AS(teichmuller(Padic::from_integer(5, 5, 3)), domain_error);
  CHECK_THROWS_AS(teichmuller(Padic::zero(5, 3)), domain_error);
}

TEST_CASE("angle values") {
  CHECK(angle(Padic::from_rational(Rat(1, 5), 5, 3)).unit() == 1);
  CHECK(angle(Padic::from_integer(2, 5, 2)).unit() == 11);  // 2/omega(2) = 2*18 = 36 == 11
  CHECK(angle(Padic::from_rational(Rat(125), 5, 3)).unit() == 1);
  CHECK_THROWS_AS(angle(Padic::zero(5, 3)), domain_error);
}

TEST_CASE("omega_v values") {
  Padic w = omega_v(Padic::from_rational(Rat(1, 5), 5, 3));
  CHECK(w.valuation() == -1);
  CHECK(w.unit() == 1);

  CHECK(omega_v(Padic::from_integer(2, 5, 2)).unit() == 7);
  CHECK(omega_v(Padic::from_integer(1, 5, 3)).unit() == 1);
}

TEST_CASE("decomposition reassembles") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 50; ++i) {
      Padic a = Padic::from_rational(rng.rational_q(p), p, 10);
      auto d = decompose(a);
      Padic back = d.teichmuller.shift(d.valuation) * d.principal;
      CHECK(padic_eq(back, a));
      CHECK(padic_eq(d.teichmuller.pow_int(p - 1), Padic::from_integer(1, p, 10)));
      CHECK(d.principal.residue(1) == 1);
    }
  }
}

TEST_CASE("log_p values") {
  Padic l6 = log_p(Padic::from_integer(6, 5, 3));
  CHECK(l6.residue(3) == 55);  // 5 - 25/2 == 55 mod 125

  Padic w2 = teichmuller(Padic::from_integer(2, 5, 6));
  CHECK(log_p(w2).is_zero());

  CHECK(log_p(Padic::from_rational(Rat(1, 5), 5, 4)).is_zero());
  CHECK_THROWS_AS(log_p(Padic::zero(5, 3)), domain_error);
}

TEST_CASE("exp_p values") {
  Padic e0 = exp_p(Padic::zero(5, 3));
  CHECK(e0.unit() == 1);

  Padic e5 = exp_p(Padic::from_integer(5, 5, 3).with_abs_precision(3));
  CHECK(e5.residue(3) == 81);  // 1 + 5 + 25/2 == 81 mod 125

  Padic six = Padic::from_integer(6, 5, 3);
  CHECK(padic_eq(exp_p(log_p(six)), six));

  CHECK_THROWS_AS(exp_p(Padic::from_integer(2, 5, 3)), hypothesis_error);
  CHECK_THROWS_AS(exp_p(Padic::from_rational(Rat(1, 5), 5, 3)), hypothesis_error);
}

TEST_CASE("angle_pow values") {
  Padic two = Padic::from_integer(2, 5, 2);
  CHECK(angle_pow(two, Padic::zero(5, 2)).unit() == 1);
  CHECK(angle_pow(two, Padic::from_integer(2, 5, 2)).unit() == 21);  // 11^2 == 21 mod 25
  CHECK(angle_pow(two, Padic::from_integer(1, 5, 2)).unit() == 11);
  CHECK_THROWS_AS(angle_pow(two, Padic::from_rational(Rat(1, 5), 5, 2)), domain_error);
}

TEST_CASE("binomial coefficients") {
  Padic s = Padic::from_rational(Rat(7, 3), 5, 6);
  CHECK(binom(s, 0).unit() == 1);

  // binom(1-s, 2) at s = -1 is binom(2,2) = 1
  Padic two = Padic::from_integer(2, 5, 6);
  CHECK(equals_rational(binom(two, 2), Rat(1)));

  Padic half = Padic::from_rational(Rat(1, 2), 5, 6);
  CHECK(equals_rational(binom(half, 2), Rat(-1, 8)));
  CHECK(binom_rational(Rat(1, 2), 2) == Rat(-1, 8));

  // Pascal rule on random entries
  testutil::Rng rng;
  for (int i = 0; i < 50; ++i) {
    Padic t = Padic::from_rational(rng.rational_zp(5), 5, 10);
    long n = rng.integer(1, 8);
    Padic lhs = binom(t, n);
    Padic one = Padic::from_integer(1, 5, 10);
    Padic rhs = binom(t - one, n) + binom(t - one, n - 1);
    CHECK(padic_eq(lhs, rhs));
  }
}

TEST_CASE("pochhammer") {
  Padic a = Padic::from_rational(Rat(3, 7), 5, 6);
  CHECK(pochhammer(a, 0).unit() == 1);
  CHECK(equals_rational(pochhammer(Padic::from_integer(1, 5, 8), 5), Rat(120)));
  CHECK(equals_rational(pochhammer(Padic::from_integer(2, 5, 8), 2), Rat(6)));  // (s-1)_2, s=3
  CHECK(pochhammer_rational(Rat(2), 2) == Rat(6));
}

TEST_CASE("multiplicativity of the decomposition") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 200; ++i) {
      Padic a = Padic::from_rational(rng.rational_q(p), p, 10);
      Padic b = Padic::from_rational(rng.rational_q(p), p, 10);
      CHECK(padic_eq(omega_v(a * b), omega_v(a) * omega_v(b)));
      CHECK(padic_eq(angle(a * b), angle(a) * angle(b)));
    }
  }
}

TEST_CASE("angle_pow additivity in s") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 60; ++i) {
      Padic lam = Padic::from_rational(rng.rational_q(p), p, 12);
      Padic s = Padic::from_rational(rng.rational_zp(p), p, 12);
      Padic t = Padic::from_rational(rng.rational_zp(p), p, 12);
      CHECK(padic_eq(angle_pow(lam, s + t), angle_pow(lam, s) * angle_pow(lam, t)));
    }
  }
}

TEST_CASE("exp_p inverts log_p on principal units") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 100; ++i) {
      Rat t = rng.rational_zp(p);
      Rat u = 1 + t * p;
      u.canonicalize();
      Padic x = Padic::from_rational(u, p, 10);
      CHECK(padic_eq(exp_p(log_p(x)), x));
    }
  }
}

TEST_CASE("derivative of the projection: difference quotient matches <a>/a") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 60; ++i) {
      // |a|_p >= 1, single analytic branch; working precision must exceed
      // val(h) by the digits we want to certify
      Rat a = rng.rational_q(p, -3, 0);
      long hv = rng.integer(4, 8);
      Rat h = Rat(power_of(p, hv));
      Padic pa = Padic::from_rational(a, p, 20);
      Padic ph = Padic::from_rational(h, p, 20);
      Padic quotient = (angle(Padic::from_rational(a + h, p, 20)) - angle(pa)) / ph;
      Padic closed = angle(pa) / pa;
      long agree = agreement(quotient, closed);
      CHECK(agree >= hv - 1);  // in fact exact on one branch
    }
  }
}

TEST_CASE("binomial series route equals exp-log route") {
  testutil::Rng rng;
  for (long p : {5L, 7L}) {
    for (int i = 0; i < 60; ++i) {
      Padic lam = Padic::from_rational(rng.rational_q(p), p, 12);
      Padic s = Padic::from_rational(rng.rational_zp(p), p, 12);
      CHECK(padic_eq(angle_pow(lam, s), angle_pow_binomial(lam, s)));
    }
  }
}

TEST_SUITE_END();
