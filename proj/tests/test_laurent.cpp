#include <random>

#include "doctest.h"
#include "lmov/laurent.hpp"

using namespace lmov;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int terms = 4, int spread = 3) {
  std::uniform_int_distribution<int> exp(-spread, spread), coef(-5, 5);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(Monomial{exp(rng), exp(rng)}, ratio(coef(rng), 1 + (i % 3)));
  return p;
}

// Evaluate at rational s, v to get an independent check of ring operations.
Rational eval(const LaurentPoly& p, const Rational& s, const Rational& v) {
  auto power = [](const Rational& x, int n) {
    Rational r(1);
    for (int i = 0; i < std::abs(n); ++i) r *= x;
    return n >= 0 ? r : Rational(1 / r);
  };
  Rational total(0);
  for (const auto& [m, c] : p.terms()) total += c * power(s, m.s) * power(v, m.v);
  return total;
}

}  // namespace

TEST_CASE("rational text form") {
  CHECK(format_rational(ratio(3, 2)) == "+3/2");
  CHECK(format_rational(Rational(-1)) == "-1/1");
  CHECK(format_rational(Rational(0)) == "+0/1");
  CHECK(parse_rational("+6/4") == ratio(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("5/1") == Rational(5));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("no zero coefficients are stored") {
  LaurentPoly p = LaurentPoly::monomial(1, 2, 3);
  p.add_term(Monomial{1, 2}, -3);
  CHECK(p.is_zero());
  CHECK(LaurentPoly::monomial(4, 4, 0).is_zero());
  CHECK(qnum(1) - qnum(1) == LaurentPoly{});
}

TEST_CASE("quantum integers") {
  CHECK(qnum(1).to_string() == "-1,0:+1/1 1,0:-1/1");
  CHECK(qnum(2) == LaurentPoly::monomial(-2, 0) - LaurentPoly::monomial(2, 0));
  CHECK(vnum(1) == LaurentPoly::monomial(0, -1) - LaurentPoly::monomial(0, 1));
  // [1]^2 = q^{-1} - 2 + q
  CHECK(qnum(1).pow(2) == LaurentPoly::monomial(-2, 0) - LaurentPoly(2) + LaurentPoly::monomial(2, 0));
  // [2] = [1] (q^{1/2} + q^{-1/2})
  CHECK(qnum(2) == qnum(1) * (LaurentPoly::monomial(1, 0) + LaurentPoly::monomial(-1, 0)));
}

TEST_CASE("ring axioms agree with evaluation") {
  std::mt19937 rng(7);
  const Rational s = ratio(3, 5), v = ratio(-2, 7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(eval(a * b, s, v) == eval(a, s, v) * eval(b, s, v));
    CHECK(eval(a + b, s, v) == eval(a, s, v) + eval(b, s, v));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly{});
    CHECK(-(-a) == a);
  }
}

TEST_CASE("extents, slices and leading term") {
  const LaurentPoly p = LaurentPoly::monomial(-2, 1, 3) + LaurentPoly::monomial(5, -1) + LaurentPoly::monomial(5, 4, 2);
  CHECK(p.min_s() == -2);
  CHECK(p.max_s() == 5);
  CHECK(p.min_v() == -1);
  CHECK(p.max_v() == 4);
  CHECK(p.leading_term().first == Monomial{5, 4});
  CHECK(p.s_slice(5) == LaurentPoly::monomial(0, -1) + LaurentPoly::monomial(0, 4, 2));
  CHECK(p.coefficient(-2, 1) == Rational(3));
  CHECK(p.coefficient(0, 0) == Rational(0));
  CHECK(p.truncated_s(5) == LaurentPoly::monomial(-2, 1, 3));
  CHECK(p.shifted(1, -1).min_s() == -1);
  CHECK_THROWS(LaurentPoly{}.min_s());
  CHECK(LaurentPoly(4).is_constant());
  CHECK(qnum(3).is_v_free());
  CHECK(vnum(3).is_s_free());
}

TEST_CASE("substitutions compose like function application") {
  std::mt19937 rng(11);
  const Substitution subs[] = {Substitution::invert_s(), Substitution::negate_v_sign(), Substitution::adams(2),
                               Substitution::adams(3), Substitution{-2, 3, true}};
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_poly(rng);
    for (const auto& a : subs)
      for (const auto& b : subs) CHECK(p.substitute(a).substitute(b) == p.substitute(a.compose(b)));
  }
  CHECK(vnum(1).substitute(Substitution::negate_v_sign()) == -vnum(1));
  CHECK(qnum(1).substitute(Substitution::invert_s()) == -qnum(1));
  CHECK(qnum(1).substitute(Substitution::adams(3)) == qnum(3));
  CHECK_THROWS_AS(Substitution::adams(0), std::invalid_argument);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_poly(rng, 6);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK_THROWS(LaurentPoly::parse("1,1:+1/1 1,1:+2/1"));
  CHECK_THROWS(LaurentPoly::parse("1,1:+0/1"));
  CHECK_THROWS(LaurentPoly::parse("1;1:+1/1"));
}
