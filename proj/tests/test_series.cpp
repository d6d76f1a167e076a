#include <random>

#include "doctest.h"
#include "lmov/series.hpp"

using namespace lmov;

namespace {

RatFunc random_value(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-2, 2), coef(-3, 3);
  LaurentPoly num;
  for (int i = 0; i < 2; ++i) num.add_term(Monomial{exp(rng), exp(rng)}, coef(rng));
  return RatFunc(num, qnum(1 + (coef(rng) & 1)));
}

PSeries<RatFunc> random_series(std::mt19937& rng, int components, int degree, RatFunc constant) {
  PSeries<RatFunc> p(components, degree, std::move(constant));
  for (const auto& key : enumerate_vectors(components, degree)) p.set(key, random_value(rng));
  return p;
}

PartitionVector key(std::initializer_list<Partition> parts) { return PartitionVector(parts); }

}  // namespace

TEST_CASE("power-sum product rule") {
  PSeries<RatFunc> a(1, 3), b(1, 3);
  a.set(key({Partition{1}}), 1);  // p_1
  b.set(key({Partition{2}}), 2);  // p_2 (stored 2 = z_(2) * 1)
  const auto c = a * b;
  // p_1 p_2 = p_{21}; stored coefficient z_{21} = 2.
  CHECK(c.coefficient(key({Partition{2, 1}})) == RatFunc(2));
  CHECK(c.raw_coefficient(key({Partition{2, 1}})) == RatFunc(1));
  const auto sq = a * a;
  CHECK(sq.raw_coefficient(key({Partition{1, 1}})) == RatFunc(1));
  CHECK(!sq.truncated());
  const auto high = (a * b) * b;
  CHECK(high.truncated());
  CHECK(high.coefficients().empty());
}

TEST_CASE("exp of sum p_d / d is the sum of all h_n") {
  for (int degree = 1; degree <= 4; ++degree) {
    PSeries<RatFunc> f(1, degree);
    for (int d = 1; d <= degree; ++d) f.add_raw(key({Partition{d}}), ratio(1, d));
    const auto h = exp_series(f);
    // h_n = sum_{mu |- n} p_mu / z_mu: every stored coefficient is 1.
    for (const auto& mu : enumerate_vectors(1, degree)) CHECK(h.coefficient(mu) == RatFunc(1));
    CHECK(log_series(h) == f);
  }
}

TEST_CASE("log and exp are inverse") {
  std::mt19937 rng(17);
  for (int components = 1; components <= 2; ++components)
    for (int degree = 1; degree <= 4 - components + 1; ++degree) {
      const auto f = random_series(rng, components, degree, RatFunc{});
      CHECK(log_series(exp_series(f)) == f);
      const auto z = random_series(rng, components, degree, RatFunc(1));
      CHECK(exp_series(log_series(z)) == z);
    }
  CHECK_THROWS_AS(exp_series(PSeries<RatFunc>(1, 2, RatFunc(1))), BadConstantTerm);
  CHECK_THROWS_AS(log_series(PSeries<RatFunc>(1, 2)), BadConstantTerm);
}

TEST_CASE("schur and power bases are inverse") {
  std::mt19937 rng(19);
  for (int components = 1; components <= 2; ++components)
    for (int degree = 1; degree <= 4; ++degree) {
      SchurCoeffs<RatFunc> s(components, degree);
      for (const auto& k : enumerate_vectors(components, degree)) s.set(k, random_value(rng));
      CHECK(power_to_schur(schur_to_power(s)) == s);
    }
}

TEST_CASE("schur_to_power on a single Schur function") {
  SchurCoeffs<RatFunc> s(1, 2);
  s.set(key({Partition{1, 1}}), 1);
  const auto p = schur_to_power(s);
  // s_{11} = p_1^2 / 2 - p_2 / 2: stored chi_{11}(mu) = 1, -1.
  CHECK(p.coefficient(key({Partition{1, 1}})) == RatFunc(1));
  CHECK(p.coefficient(key({Partition{2}})) == RatFunc(-1));
}

TEST_CASE("T and its inverse") {
  std::mt19937 rng(23);
  for (int components = 1; components <= 2; ++components)
    for (int degree = 1; degree <= 4; ++degree) {
      SchurCoeffs<RatFunc> s(components, degree);
      for (const auto& k : enumerate_vectors(components, degree)) s.set(k, random_value(rng));
      CHECK(transform_T(transform_T(s, false), true) == s);
      CHECK(transform_T(transform_T(s, true), false) == s);
    }
  const RatMatrix t1 = transform_matrix({1}, false);
  CHECK(t1(0, 0) == RatFunc(LaurentPoly(1), qnum(1)));
  // Degree 2: T = X diag(w / z) X^T with w = 1/[1]^2, 1/[2].
  const RatMatrix t2 = transform_matrix({2}, false);
  const RatFunc a(LaurentPoly(1), qnum(1) * qnum(1)), b(LaurentPoly(1), qnum(2));
  CHECK(t2(0, 0) == a * ratio(1, 2) + b * ratio(1, 2));
  CHECK(t2(0, 1) == a * ratio(1, 2) - b * ratio(1, 2));
}

TEST_CASE("q^rho specialisation round trip") {
  std::mt19937 rng(29);
  const auto p = random_series(rng, 1, 3, RatFunc(1));
  CHECK(specialize_qrho(specialize_qrho(p, QrhoDirection::y_to_x), QrhoDirection::x_to_y) == p);
  CHECK(qrho_weight(key({Partition{2, 1}}), QrhoDirection::x_to_y) == RatFunc(qnum(2) * qnum(1)));
}

TEST_CASE("Adams operations") {
  PSeries<RatFunc> p(1, 4);
  p.add_raw(key({Partition{1}}), RatFunc(LaurentPoly::monomial(1, 1)));
  p.add_raw(key({Partition{2, 1}}), 3);
  const auto a = adams_x(p, 2);
  CHECK(a.raw_coefficient(key({Partition{2}})) == RatFunc(LaurentPoly::monomial(1, 1)));
  CHECK(a.truncated());  // p_{21} -> p_{42} is beyond degree 4
  const auto b = adams_qt(p, 3);
  CHECK(b.raw_coefficient(key({Partition{1}})) == RatFunc(LaurentPoly::monomial(3, 3)));
  CHECK_THROWS(adams_x(p, 0));
}

TEST_CASE("block characters are Kronecker products") {
  const auto& block = block_characters({2, 1});
  REQUIRE(block.keys.size() == 2);
  CHECK(block.chi(1, 0) == -1);  // chi_{(11),(1)} at class ((2),(1))
  CHECK(block.z(0) == 2);
}

TEST_CASE("series over truncated q-series") {
  PSeries<QSeries> f(1, 3);
  const QSeries w = expand_to_precision(RatFunc(LaurentPoly(1), qnum(1) * qnum(1)), 15);
  f.add_raw(key({Partition{1}}), w);
  const auto z = exp_series(f);
  // raw p_1^2 coefficient of exp is w^2 / 2, stored times z_{11} = 2.
  CHECK(z.coefficient(key({Partition{1, 1}})) == w * w);
  const auto back = log_series(z);
  CHECK(back.coefficient(key({Partition{1}})) == f.coefficient(key({Partition{1}})));
}

TEST_CASE("incompatible series") {
  PSeries<RatFunc> a(1, 2), b(2, 2), c(1, 3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * c, std::invalid_argument);
  CHECK_THROWS_AS(a.set(key({Partition{1}, Partition{}}), 1), std::invalid_argument);
}
