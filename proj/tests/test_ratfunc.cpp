#include <random>

#include "doctest.h"
#include "lmov/ratfunc.hpp"

using namespace lmov;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-2, 2), coef(-3, 3);
  LaurentPoly p;
  for (int i = 0; i < 3; ++i) p.add_term(Monomial{exp(rng), exp(rng)}, coef(rng));
  return p;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng);
  return RatFunc(random_poly(rng), den);
}

const LaurentPoly s = LaurentPoly::monomial(1, 0);
const LaurentPoly v = LaurentPoly::monomial(0, 1);

}  // namespace

TEST_CASE("canonical form makes equality structural") {
  const LaurentPoly one(1);
  CHECK(RatFunc(s * s - one, s - one) == RatFunc(s + one));
  CHECK(RatFunc(s * s - one, s - one).is_polynomial());
  CHECK(RatFunc(qnum(2), qnum(1)) == RatFunc(s + s.pow(1).substitute(Substitution::invert_s())));
  CHECK(RatFunc(Rational(2) * s, Rational(4) * v) == RatFunc(LaurentPoly::monomial(1, -1, ratio(1, 2))));
  // Same function written two ways.
  const RatFunc a(s - v, s * s - v * v);
  const RatFunc b(one, s + v);
  CHECK(a == b);
  CHECK(b.den().leading_term().second == Rational(1));
  CHECK(RatFunc(LaurentPoly{}, s + one) == RatFunc{});
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.inverse() == RatFunc(1));
    }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(9);
  const Substitution sub = Substitution::invert_s().compose(Substitution::negate_v_sign());
  for (int trial = 0; trial < 20; ++trial) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    CHECK((a + b).substitute(Substitution::adams(2)) ==
          a.substitute(Substitution::adams(2)) + b.substitute(Substitution::adams(2)));
  }
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(RatFunc(1) / RatFunc{}, DivisionByZero);
  CHECK_THROWS_AS(RatFunc{}.inverse(), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly{}), DivisionByZero);
}

TEST_CASE("as_laurent") {
  CHECK(as_laurent(RatFunc(qnum(4), qnum(2))) == s.pow(2) + LaurentPoly::monomial(-2, 0));
  CHECK(as_laurent(RatFunc(LaurentPoly::monomial(-3, 2))) == LaurentPoly::monomial(-3, 2));
  try {
    as_laurent(RatFunc(s * s + LaurentPoly(1), s + LaurentPoly(1)));
    FAIL("expected NotPolynomial");
  } catch (const NotPolynomial& e) {
    // s^2 + 1 = (s - 1)(s + 1) + 2
    CHECK(e.remainder == LaurentPoly(2));
  }
}

TEST_CASE("polynomial gcd") {
  const LaurentPoly one(1);
  const LaurentPoly g = s + v + one;
  const LaurentPoly a = g * (s - v), b = g * (s * v + LaurentPoly(2));
  CHECK(polynomial_gcd(a, b) == g);
  CHECK(polynomial_gcd(s + one, s - one) == one);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFunc a = random_ratfunc(rng);
    CHECK(RatFunc::parse(a.to_string()) == a);
  }
  CHECK(RatFunc(qnum(1), qnum(1) * qnum(1)).to_string().find(" / ") != std::string::npos);
}
