#include "lmov/qseries.hpp"

#include <algorithm>
#include <vector>

namespace lmov {

namespace {

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  if (a >= QSeries::kExact || b >= QSeries::kExact) return QSeries::kExact;
  return std::min(a + b, QSeries::kExact);
}

int checked_int(std::int64_t x) {
  if (x > std::numeric_limits<int>::max() / 2 || x < std::numeric_limits<int>::min() / 2)
    throw std::overflow_error("series exponent out of range");
  return static_cast<int>(x);
}

}  // namespace

QSeries QSeries::exact(const LaurentPoly& p, Branch branch) {
  if (branch == Branch::descending) return QSeries(p.substitute(Substitution::invert_s()), kExact, branch);
  return QSeries(p, kExact, branch);
}

QSeries QSeries::zero(std::int64_t precision, Branch branch) { return QSeries(LaurentPoly{}, precision, branch); }

QSeries QSeries::from_body(LaurentPoly body, std::int64_t precision, Branch branch) {
  if (precision < kExact) body = body.truncated_s(checked_int(precision));
  return QSeries(std::move(body), precision, branch);
}

std::int64_t QSeries::offset() const { return body_.is_zero() ? precision_ : body_.min_s(); }

LaurentPoly QSeries::in_s() const {
  return branch_ == Branch::descending ? body_.substitute(Substitution::invert_s()) : body_;
}

bool QSeries::is_constant() const { return body_.is_s_free() && is_exact(); }

QSeries QSeries::truncated(std::int64_t precision) const {
  if (precision >= precision_) return *this;
  return QSeries(body_.truncated_s(checked_int(precision)), precision, branch_);
}

Branch QSeries::merged_branch(const QSeries& a, const QSeries& b) {
  if (a.branch_ == b.branch_) return a.branch_;
  if (a.is_constant()) return b.branch_;
  if (b.is_constant()) return a.branch_;
  throw std::invalid_argument("mixing q-series expanded on different branches");
}

QSeries& QSeries::operator+=(const QSeries& o) {
  branch_ = merged_branch(*this, o);
  precision_ = std::min(precision_, o.precision_);
  body_ += o.body_;
  if (!is_exact()) body_ = body_.truncated_s(checked_int(precision_));
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Rational& c) {
  body_ *= c;
  return *this;
}

QSeries QSeries::operator-() const { return QSeries(-body_, precision_, branch_); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  Branch branch = QSeries::merged_branch(a, b);
  std::int64_t precision = std::min(saturating_add(a.offset(), b.precision_), saturating_add(b.offset(), a.precision_));
  LaurentPoly body;
  if (!a.body_.is_zero() && !b.body_.is_zero()) {
    // Drop input terms that can only land at or past the result precision.
    if (precision < QSeries::kExact) {
      int cut_a = checked_int(precision - b.offset());
      int cut_b = checked_int(precision - a.offset());
      body = a.body_.truncated_s(cut_a) * b.body_.truncated_s(cut_b);
      body = body.truncated_s(checked_int(precision));
    } else {
      body = a.body_ * b.body_;
    }
  }
  return QSeries(std::move(body), precision, branch);
}

std::string QSeries::to_string() const {
  std::string out = body_.to_string();
  if (!is_exact()) out += " + O(u^" + std::to_string(precision_) + ")";
  return out;
}

QSeries expand_qseries(const RatFunc& f, int order, Branch branch) {
  if (order < 0) throw std::invalid_argument("expand_qseries: negative order");
  if (f.is_zero()) return QSeries{};
  RatFunc g = branch == Branch::descending ? f.substitute(Substitution::invert_s()) : f;
  if (g.is_polynomial()) {
    // g is already written in the expansion variable.
    return QSeries::from_body(g.num(), QSeries::kExact, branch);
  }
  const LaurentPoly& num = g.num();
  const LaurentPoly& den = g.den();
  const int n_lo = num.min_s();
  const int d_lo = den.min_s();
  LaurentPoly lead = den.s_slice(d_lo);
  if (!lead.is_monomial())
    throw ZeroDenominator("lowest coefficient of the denominator is not a unit: " + lead.to_string());
  const auto& [lead_mono, lead_coeff] = *lead.terms().begin();
  const LaurentPoly lead_inverse = LaurentPoly::monomial(0, -lead_mono.v, 1 / lead_coeff);

  std::vector<LaurentPoly> den_slices;
  for (int j = 0; j <= std::min(order, den.max_s() - d_lo); ++j) den_slices.push_back(den.s_slice(d_lo + j));

  const int offset = n_lo - d_lo;
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(order) + 1);
  LaurentPoly body;
  for (int k = 0; k <= order; ++k) {
    LaurentPoly acc = num.s_slice(n_lo + k);
    for (int j = 1; j <= k && j < static_cast<int>(den_slices.size()); ++j)
      acc -= den_slices[static_cast<std::size_t>(j)] * coeffs[static_cast<std::size_t>(k - j)];
    coeffs[static_cast<std::size_t>(k)] = acc * lead_inverse;
    body += coeffs[static_cast<std::size_t>(k)].shifted(offset + k, 0);
  }
  return QSeries::from_body(std::move(body), static_cast<std::int64_t>(offset) + order + 1, branch);
}

QSeries expand_to_precision(const RatFunc& f, std::int64_t precision, Branch branch) {
  if (f.is_zero()) return QSeries{};
  RatFunc g = branch == Branch::descending ? f.substitute(Substitution::invert_s()) : f;
  if (g.is_polynomial()) return expand_qseries(f, 0, branch).truncated(precision);
  const std::int64_t offset = g.num().min_s() - g.den().min_s();
  if (offset >= precision) return QSeries::zero(precision, branch);
  return expand_qseries(f, checked_int(precision - offset - 1), branch);
}

}  // namespace lmov
