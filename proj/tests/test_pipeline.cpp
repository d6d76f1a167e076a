#include <random>

#include "doctest.h"
#include "lmov/pipeline.hpp"
#include "lmov/product.hpp"

using namespace lmov;

namespace {

PartitionVector key1(const Partition& p) { return PartitionVector{p}; }

// Degree-1 table holding a single value.
WTable single(const RatFunc& w1) {
  WTable w;
  w.max_degree = 1;
  w.entries.emplace(key1(Partition{1}), w1);
  return w;
}

LaurentPoly spin(int g) {
  LaurentPoly out;
  for (int k = 0; k <= g; ++k) out.add_term(Monomial{2 * (g - 2 * k), 0}, 1);
  return out;
}

}  // namespace

TEST_CASE("validation of W tables") {
  WTable w;
  w.max_degree = 2;
  w.entries.emplace(key1(Partition{1}), 1);
  CHECK_THROWS_AS(w.validate(), MissingDegrees);
  CHECK_THROWS_AS(unknot_table(2).truncated(3), MissingDegrees);
  CHECK(unknot_table(3).truncated(2).entries == unknot_table(2).entries);
}

TEST_CASE("stage inverses") {
  const WTable w = unknot_table(4);
  const ZmuTable z = reformulate_Z(w);
  CHECK(reformulate_W(z).entries == w.entries);
  const FTable f = free_energy(z);
  const fTable small = extract_f(f);
  CHECK(resum_f(small) == f);
}

TEST_CASE("Moebius inversion on an arbitrary series") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int components = 1; components <= 2; ++components) {
    FTable f;
    f.components = components;
    f.max_degree = 4;
    for (const auto& k : enumerate_vectors(components, 4))
      f.entries.emplace(k, RatFunc(LaurentPoly::monomial(coef(rng), coef(rng), coef(rng)), qnum(1)));
    CHECK(resum_f(extract_f(f)) == f);
  }
}

TEST_CASE("unknot free energy is concentrated in degree one") {
  const PipelineResult r = run_pipeline(unknot_table(3));
  for (const auto& [k, value] : r.f.schur) {
    if (k == key1(Partition{1}))
      CHECK(value == RatFunc(vnum(1), qnum(1)));
    else
      CHECK(value.is_zero());
  }
}

TEST_CASE("unknot checked-n") {
  const PipelineResult r = run_pipeline(unknot_table(3));
  REQUIRE(r.checkn);
  for (const auto& [mu, row] : r.checkn->rows) {
    if (mu == key1(Partition{1})) {
      CHECK(row.size() == 2);
      CHECK(row.at(GenusCharge{0, 1}) == Rational(-1));
      CHECK(row.at(GenusCharge{0, -1}) == Rational(1));
      CHECK(r.checkn->bounds.at(mu).g_max == 0);
      CHECK(r.checkn->bounds.at(mu).two_q_abs_max == 1);
    } else {
      CHECK(row.empty());
      CHECK(r.checkn->bounds.at(mu).g_max == -1);
    }
  }
}

TEST_CASE("degree-one shortcut P = W / [1]") {
  const RatFunc w1(vnum(1) * LaurentPoly::monomial(0, 2), qnum(1));
  const PipelineResult r = run_pipeline(single(w1));
  CHECK(r.p.at(key1(Partition{1})) == w1 / RatFunc(qnum(1)));
  const PipelineResult lit = run_pipeline(single(w1), PConvention::literal_tinv);
  CHECK(lit.p.at(key1(Partition{1})) == w1 * RatFunc(qnum(1)));
}

TEST_CASE("genus expansion decomposition") {
  // [1]^2 P = 3 t^{1/2} + 2 [1]^2 t^{-1/2} - [1]^4
  const LaurentPoly z2 = qnum(1) * qnum(1);
  const LaurentPoly x = LaurentPoly::monomial(0, 1, 3) + z2 * LaurentPoly::monomial(0, -1, 2) - z2 * z2;
  const IntegerRow row = decompose_genus_expansion(x);
  CHECK(row.size() == 3);
  CHECK(row.at(GenusCharge{0, 1}) == 3);
  CHECK(row.at(GenusCharge{1, -1}) == 2);
  CHECK(row.at(GenusCharge{2, 0}) == -1);
}

TEST_CASE("integrality failure kinds") {
  auto kind = [](const LaurentPoly& x) {
    try {
      decompose_genus_expansion(x);
      return IntegralityFailure::none;
    } catch (const IntegralityError& e) {
      return e.kind;
    }
  };
  CHECK(kind(LaurentPoly::monomial(1, 0)) == IntegralityFailure::half_integer_q_power);
  CHECK(kind(LaurentPoly::monomial(2, 0)) == IntegralityFailure::asymmetric_q_part);
  CHECK(kind(LaurentPoly(ratio(1, 2))) == IntegralityFailure::non_integer_coefficient);

  const PipelineResult bad = run_pipeline(single(RatFunc(LaurentPoly(1), qnum(1) * qnum(1))));
  CHECK(!bad.integrality.all_passed());
  CHECK(bad.integrality.rows.front().failure == IntegralityFailure::not_polynomial);
  CHECK(bad.integrality.failing_keys() == std::vector<PartitionVector>{key1(Partition{1})});
  CHECK(!bad.checkn);
  CHECK_THROWS_AS(extract_N(bad.p), IntegralityError);
}

TEST_CASE("N to n on a hand example") {
  // 1 + [1]^2 = q + q^{-1} - 1 = chi_1 - chi_0
  const auto n = genus_to_spin_basis({{0, 1}, {1, 1}});
  CHECK(n == std::map<int, Integer>{{0, -1}, {1, 1}});
  CHECK(spin_to_genus_basis(n) == std::map<int, Integer>{{0, 1}, {1, 1}});
}

TEST_CASE("N and n describe the same polynomial") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> coef(-20, 20), genus(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<int, Integer> big;
    for (int i = 0; i < 4; ++i) {
      const int c = coef(rng);
      if (c != 0) big[genus(rng)] = c;
    }
    const auto small = genus_to_spin_basis(big);
    LaurentPoly lhs, rhs;
    for (const auto& [g, n] : big) lhs += (qnum(1) * qnum(1)).pow(static_cast<unsigned>(g)) * Rational(n);
    for (const auto& [g, n] : small) rhs += spin(g) * Rational(n);
    CHECK(lhs == rhs);
    CHECK(spin_to_genus_basis(small) == big);
  }
}

TEST_CASE("checked-n sums characters over the block") {
  nTable n;
  n.max_degree = 2;
  n.rows[key1(Partition{1})];
  n.rows[key1(Partition{2})][GenusCharge{0, 2}] = 4;
  n.rows[key1(Partition{1, 1})][GenusCharge{0, 2}] = 2;
  const CheckNTable c = compute_checkn(n);
  // mu = (2): (1*4 + (-1)*2) / 2 ; mu = (1,1): (4 + 2) / 2
  CHECK(c.rows.at(key1(Partition{2})).at(GenusCharge{0, 2}) == Rational(1));
  CHECK(c.rows.at(key1(Partition{1, 1})).at(GenusCharge{0, 2}) == Rational(3));
  CHECK(c.rows.at(key1(Partition{1})).empty());
}

TEST_CASE("integrality at degree four") {
  const PipelineResult r = run_pipeline(unknot_table(4));
  CHECK(r.integrality.all_passed());
  CHECK(r.big_n.rows.size() == enumerate_vectors(1, 4).size());
}
