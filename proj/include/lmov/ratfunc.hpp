#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lmov/laurent.hpp"

namespace lmov {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero rational function") {}
};

class RatFunc;

/// Thrown by as_laurent when the denominator does not divide the numerator.
struct NotPolynomial : std::domain_error {
  NotPolynomial(const std::string& what, LaurentPoly rem, LaurentPoly den)
      : std::domain_error(what), remainder(std::move(rem)), denominator(std::move(den)) {}
  LaurentPoly remainder;
  LaurentPoly denominator;
};

/// Quotient of Laurent polynomials in s, v, kept in a canonical form so that
/// equality is structural:
///  - the denominator is a genuine polynomial whose lowest s- and v-exponents are 0;
///  - its leading coefficient in (s, v)-lexicographic order is 1;
///  - numerator and denominator are coprime in Q[s, v].
/// Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}          // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  RatFunc inverse() const;
  RatFunc substitute(const Substitution& sub) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Rational& c);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rational& c) { return a *= c; }
  friend RatFunc operator*(const Rational& c, RatFunc a) { return a *= c; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "<num>" or "<num> / <den>" using the LaurentPoly text form.
  std::string to_string() const;
  static RatFunc parse(std::string_view text);

 private:
  struct Canonical {};
  RatFunc(Canonical, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// The exact Laurent polynomial equal to f, or NotPolynomial carrying the
/// remainder of numerator by denominator.
LaurentPoly as_laurent(const RatFunc& f);

/// Greatest common divisor in Q[s, v] of two polynomials with nonnegative
/// exponents, normalised to leading coefficient 1.  Exposed for tests.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace lmov
