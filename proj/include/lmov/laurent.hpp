#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lmov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical n/d.
inline Rational ratio(std::int64_t n, std::int64_t d) {
  Rational r{Integer(static_cast<long>(n)), Integer(static_cast<long>(d))};
  r.canonicalize();
  return r;
}

/// Parse "p/q", "+p/q", "-p" etc. into a canonical rational.
Rational parse_rational(std::string_view text);
/// Always signed, always with an explicit denominator: "+3/2", "-1/1".
std::string format_rational(const Rational& r);

/// Exponent pair of s = q^{1/2} and v = t^{1/2}.  Half-integer powers of q and t
/// are therefore plain integers here.
struct Monomial {
  int s = 0;
  int v = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Monomial substitution s -> s^{s_scale}, v -> (+/-) v^{v_scale}.
/// Covers the three maps the pipeline needs: s -> 1/s, v -> -v and the
/// Adams map (s, v) -> (s^d, v^d).
struct Substitution {
  int s_scale = 1;
  int v_scale = 1;
  bool negate_v = false;

  static Substitution invert_s() { return {-1, 1, false}; }
  static Substitution negate_v_sign() { return {1, 1, true}; }
  static Substitution adams(int d) {
    if (d < 1) throw std::invalid_argument("Adams substitution needs d >= 1");
    return {d, d, false};
  }
  /// `then` applied after `*this`.
  Substitution compose(const Substitution& then) const {
    // v -> e1 v^{k1} -> e1 (e2 v^{k2})^{k1}: sign flips when e1 flips or e2 flips an odd power.
    bool sign = negate_v != (then.negate_v && (v_scale % 2 != 0));
    return {s_scale * then.s_scale, v_scale * then.v_scale, sign};
  }
};

/// Sparse Laurent polynomial in s, v with rational coefficients.  No zero
/// coefficient is ever stored, so structural equality is ring equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants embed implicitly
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(int s_exp, int v_exp, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when no term carries a power of v.
  bool is_v_free() const;
  bool is_s_free() const;
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(int s_exp, int v_exp) const;
  /// Coefficient of s^{s_exp} as a polynomial in v only.
  LaurentPoly s_slice(int s_exp) const;

  // Exponent extents.  Undefined (throws) on the zero polynomial.
  int min_s() const;
  int max_s() const;
  int min_v() const;
  int max_v() const;

  /// Largest term in (s, v)-lexicographic order.
  const std::pair<const Monomial, Rational>& leading_term() const;

  LaurentPoly shifted(int ds, int dv) const;
  LaurentPoly substitute(const Substitution& sub) const;
  /// Keeps only terms with s-exponent strictly below `bound`.
  LaurentPoly truncated_s(int bound) const;

  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const;

  /// Entries "a,b:+p/q" joined by single spaces, ascending (a, b); "0" for zero.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

/// Quantum integer [n] = q^{-n/2} - q^{n/2} = s^{-n} - s^{n}.
LaurentPoly qnum(int n);
/// The t-analogue v^{-n} - v^{n} = t^{-n/2} - t^{n/2}.
LaurentPoly vnum(int n);

}  // namespace lmov
