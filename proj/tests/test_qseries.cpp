#include "doctest.h"
#include "lmov/qseries.hpp"

using namespace lmov;

namespace {

const LaurentPoly s = LaurentPoly::monomial(1, 0);
const LaurentPoly v = LaurentPoly::monomial(0, 1);

// sum_{m >= 1} m u^{2m} below u^precision.
LaurentPoly m_weights(int precision) {
  LaurentPoly out;
  for (int m = 1; 2 * m < precision; ++m) out.add_term(Monomial{2 * m, 0}, m);
  return out;
}

}  // namespace

TEST_CASE("1/[1]^2 on both branches") {
  const RatFunc w(LaurentPoly(1), qnum(1) * qnum(1));
  const QSeries up = expand_to_precision(w, 25);
  CHECK(up.precision() == 25);
  CHECK(up.body() == m_weights(25));
  const QSeries down = expand_to_precision(w, 25, Branch::descending);
  CHECK(down.branch() == Branch::descending);
  CHECK(down.body() == m_weights(25));
  CHECK(down.in_s() == m_weights(25).substitute(Substitution::invert_s()));
}

TEST_CASE("expansion times denominator reproduces the numerator") {
  const LaurentPoly num = v - s * s + LaurentPoly::monomial(-1, 2);
  const LaurentPoly den = LaurentPoly::monomial(0, 1) - s + LaurentPoly::monomial(3, -1, 4);
  const QSeries f = expand_qseries(RatFunc(num, den), 12);
  const QSeries back = (f * QSeries::exact(den, Branch::ascending));
  CHECK(back.precision() == f.precision());
  CHECK(back.body() == num.truncated_s(static_cast<int>(back.precision())));
}

TEST_CASE("order counts coefficients from the lowest one") {
  const QSeries f = expand_qseries(RatFunc(LaurentPoly::monomial(3, 0), LaurentPoly(1) - s), 4);
  CHECK(f.offset() == 3);
  CHECK(f.precision() == 8);
  CHECK(f.order() == 4);
}

TEST_CASE("polynomials expand exactly") {
  const QSeries f = expand_qseries(RatFunc(qnum(2)), 0);
  CHECK(f.is_exact());
  CHECK(f.body() == qnum(2));
  const QSeries g = expand_qseries(RatFunc(s), 3, Branch::descending);
  CHECK(g.body() == LaurentPoly::monomial(-1, 0));
}

TEST_CASE("non-unit lowest denominator coefficient") {
  CHECK_THROWS_AS(expand_qseries(RatFunc(LaurentPoly(1), v + LaurentPoly(1) + s), 3), ZeroDenominator);
}

TEST_CASE("precision propagation") {
  const QSeries a = QSeries::from_body(LaurentPoly::monomial(-2, 0), 5, Branch::ascending);
  const QSeries b = QSeries::from_body(LaurentPoly::monomial(1, 0), 6, Branch::ascending);
  // lowest terms -2 and 1: min(-2 + 6, 1 + 5) = 4
  CHECK((a * b).precision() == 4);
  CHECK((a + b).precision() == 5);
  CHECK((a * QSeries(3)).precision() == 5);
  CHECK(QSeries::zero(7, Branch::ascending).offset() == 7);
  CHECK((a * b).truncated(2).precision() == 2);
}

TEST_CASE("branches do not mix") {
  const QSeries a = QSeries::from_body(s, 5, Branch::ascending);
  const QSeries b = QSeries::from_body(s, 5, Branch::descending);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_NOTHROW(b + QSeries(1));
}
