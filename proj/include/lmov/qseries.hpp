#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "lmov/laurent.hpp"
#include "lmov/ratfunc.hpp"

namespace lmov {

/// Which side of |q| = 1 a series is expanded on.  `ascending` is the |q| < 1
/// branch (powers of s increase); `descending` is |q| > 1, stored as an
/// ascending series in u = s^{-1}.
enum class Branch { ascending, descending };

struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

/// Truncated Laurent series in the expansion variable u (u = s or u = 1/s),
/// with v-Laurent polynomial coefficients.  All coefficients of u^k with
/// k < precision() are exact; nothing is claimed at or beyond it.
class QSeries {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  /// Exact zero.
  QSeries() = default;
  QSeries(const Rational& c) : body_(c) {}  // NOLINT
  QSeries(int c) : body_(c) {}              // NOLINT

  /// Exact series of a Laurent polynomial in s, v on the given branch.
  static QSeries exact(const LaurentPoly& p, Branch branch);
  /// Zero known up to (excluding) u^precision.
  static QSeries zero(std::int64_t precision, Branch branch);
  /// Terms already written in the expansion variable u, keyed (u-exp, v-exp).
  static QSeries from_body(LaurentPoly body, std::int64_t precision, Branch branch);

  Branch branch() const { return branch_; }
  std::int64_t precision() const { return precision_; }
  bool is_exact() const { return precision_ >= kExact; }

  /// Terms keyed by (u-exponent, v-exponent).
  const LaurentPoly& body() const { return body_; }
  /// Lowest known nonzero u-exponent; equals precision() when no term is known.
  std::int64_t offset() const;
  /// Number of known coefficients past the offset, minus one.
  std::int64_t order() const { return precision_ - offset() - 1; }
  /// Coefficient of u^k as a polynomial in v alone.
  LaurentPoly coefficient(int k) const { return body_.s_slice(k); }

  /// Undo the u = 1/s relabelling for the descending branch.
  LaurentPoly in_s() const;

  bool is_zero() const { return body_.is_zero(); }
  /// True when only a u^0 term can be present: such series mix with either branch.
  bool is_constant() const;

  QSeries truncated(std::int64_t precision) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  QSeries operator-() const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.precision_ == b.precision_ && a.body_ == b.body_ && (a.branch_ == b.branch_ || a.is_constant());
  }

  std::string to_string() const;

 private:
  QSeries(LaurentPoly body, std::int64_t precision, Branch branch)
      : body_(std::move(body)), precision_(precision), branch_(branch) {}
  static Branch merged_branch(const QSeries& a, const QSeries& b);

  LaurentPoly body_;
  std::int64_t precision_ = kExact;
  Branch branch_ = Branch::ascending;
};

/// Expansion of f around u = 0 with `order + 1` coefficients starting at the
/// lowest nonzero one.  Requires the lowest u-coefficient of the denominator to
/// be a unit (a monomial in v).
QSeries expand_qseries(const RatFunc& f, int order, Branch branch = Branch::ascending);
/// Same expansion, sized so that every coefficient below u^precision is present.
QSeries expand_to_precision(const RatFunc& f, std::int64_t precision, Branch branch = Branch::ascending);

}  // namespace lmov
