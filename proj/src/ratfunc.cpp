#include "lmov/ratfunc.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace lmov {

namespace {

// Dense univariate polynomials over Q in v, lowest degree first, no trailing zeros.
using UPoly = std::vector<Rational>;
// Dense polynomials in s with UPoly coefficients, lowest s-degree first.
using Poly2 = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(Poly2& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const Poly2& p) { return static_cast<int>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly scale(UPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw DivisionByZero();
  UPoly r = a;
  if (degree(r) < degree(b)) return {UPoly{}, r};
  UPoly q(r.size() - b.size() + 1);
  const Rational& lead = b.back();
  while (!r.empty() && degree(r) >= degree(b)) {
    int k = degree(r) - degree(b);
    Rational c = r.back() / lead;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[j + k] -= c * b[j];
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly monic(UPoly p) {
  if (p.empty()) return p;
  Rational inv = 1 / p.back();
  return scale(std::move(p), inv);
}

// Scales to coprime integer coefficients with a positive leading one.
UPoly primitive_integer(UPoly p) {
  if (p.empty()) return p;
  Integer den = 1, num = 0;
  for (const auto& x : p) {
    if (sgn(x) == 0) continue;
    den = lcm(den, Integer(x.get_den()));
    num = gcd(num, Integer(x.get_num()));
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (sgn(p.back()) < 0) factor = -factor;
  return scale(std::move(p), factor);
}

// Primitive remainder sequence over Z: keeps coefficient growth in check where
// plain Euclid over Q does not.
UPoly gcd(UPoly a, UPoly b) {
  if (a.empty()) return monic(std::move(b));
  if (b.empty()) return monic(std::move(a));
  a = primitive_integer(std::move(a));
  b = primitive_integer(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    const Rational lb = b.back();
    while (!a.empty() && degree(a) >= degree(b)) {
      const int k = degree(a) - degree(b);
      const Rational la = a.back();
      for (auto& x : a) x *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) a[j + static_cast<std::size_t>(k)] -= la * b[j];
      trim(a);
    }
    a = primitive_integer(std::move(a));
    std::swap(a, b);
  }
  return monic(std::move(a));
}

Poly2 to_poly2(const LaurentPoly& p) {
  Poly2 out;
  if (p.is_zero()) return out;
  out.resize(static_cast<std::size_t>(p.max_s()) + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.s < 0 || m.v < 0) throw std::logic_error("to_poly2 on a proper Laurent polynomial");
    auto& u = out[static_cast<std::size_t>(m.s)];
    if (u.size() <= static_cast<std::size_t>(m.v)) u.resize(static_cast<std::size_t>(m.v) + 1);
    u[static_cast<std::size_t>(m.v)] = c;
  }
  for (auto& u : out) trim(u);
  trim(out);
  return out;
}

LaurentPoly from_poly2(const Poly2& p) {
  LaurentPoly out;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p[a].size(); ++b)
      out.add_term(Monomial{static_cast<int>(a), static_cast<int>(b)}, p[a][b]);
  return out;
}

UPoly content(const Poly2& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? monic(c) : gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

// Divides out the Q[v]-content and scales so the top coefficient of the
// leading s-coefficient is 1.
Poly2 primitive(Poly2 p) {
  if (p.empty()) return p;
  UPoly c = content(p);
  if (c.size() > 1) {
    for (auto& u : p) {
      if (u.empty()) continue;
      auto [q, r] = divmod(u, c);
      u = std::move(q);
    }
  }
  // Integer coefficients with unit integer content, positive leading term.
  Integer den = 1, num = 0;
  for (const auto& u : p)
    for (const auto& x : u) {
      if (sgn(x) == 0) continue;
      den = lcm(den, Integer(x.get_den()));
      num = gcd(num, Integer(x.get_num()));
    }
  Rational factor(den, num);
  factor.canonicalize();
  if (sgn(p.back().back()) < 0) factor = -factor;
  for (auto& u : p) u = scale(std::move(u), factor);
  return p;
}

Poly2 transpose(const Poly2& p) {
  Poly2 out;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p[a].size(); ++b) {
      if (sgn(p[a][b]) == 0) continue;
      if (out.size() <= b) out.resize(b + 1);
      if (out[b].size() <= a) out[b].resize(a + 1);
      out[b][a] = p[a][b];
    }
  return out;
}

int inner_degree(const Poly2& p) {
  int d = 0;
  for (const auto& u : p) d = std::max(d, degree(u));
  return d;
}

Poly2 pseudo_remainder(Poly2 r, const Poly2& b) {
  const UPoly& lb = b.back();
  while (!r.empty() && degree(r) >= degree(b)) {
    int k = degree(r) - degree(b);
    UPoly lr = r.back();
    for (auto& u : r) u = mul(u, lb);
    for (std::size_t j = 0; j < b.size(); ++j) r[j + k] = sub(r[j + k], mul(lr, b[j]));
    trim(r);
  }
  return r;
}

Rational evaluate(const UPoly& u, const Rational& v) {
  Rational out(0);
  for (auto it = u.rbegin(); it != u.rend(); ++it) out = out * v + *it;
  return out;
}

// Degree in s of gcd(a(v0), b(v0)) for some v0 keeping both leading
// coefficients nonzero: an upper bound for the s-degree of gcd(a, b).
int image_gcd_degree(const Poly2& a, const Poly2& b) {
  for (int k = 1;; ++k) {
    const Rational v0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    if (sgn(evaluate(a.back(), v0)) == 0 || sgn(evaluate(b.back(), v0)) == 0) continue;
    UPoly ia, ib;
    for (const auto& u : a) ia.push_back(evaluate(u, v0));
    for (const auto& u : b) ib.push_back(evaluate(u, v0));
    trim(ia);
    trim(ib);
    return degree(gcd(ia, ib));
  }
}

Poly2 exact_divide(Poly2 a, const Poly2& g);

Poly2 gcd(Poly2 a, Poly2 b) {
  if (a.empty()) return primitive(std::move(b));
  if (b.empty()) return primitive(std::move(a));
  UPoly c = gcd(content(a), content(b));
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  const int bound = degree(b) == 0 ? 0 : image_gcd_degree(a, b);
  if (bound == 0) return Poly2{c};
  if (bound == degree(b)) {
    // Most likely b itself divides a.
    try {
      exact_divide(a, b);
      for (auto& u : b) u = mul(u, c);
      trim(b);
      return b;
    } catch (const std::logic_error&) {
    }
  }
  while (!b.empty()) {
    Poly2 r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? Poly2{} : primitive(std::move(r));
  }
  for (auto& u : a) u = mul(u, c);
  trim(a);
  return a;
}

// Runs the remainder sequence in whichever variable has the smaller degree.
Poly2 gcd_oriented(const Poly2& a, const Poly2& b) {
  const int outer = std::max(degree(a), degree(b));
  const int inner = std::max(inner_degree(a), inner_degree(b));
  if (inner >= outer) return gcd(a, b);
  return transpose(gcd(transpose(a), transpose(b)));
}

Poly2 exact_divide(Poly2 a, const Poly2& g) {
  if (g.empty()) throw DivisionByZero();
  if (a.empty()) return a;
  if (degree(a) < degree(g)) throw std::logic_error("exact_divide: not divisible");
  Poly2 q(a.size() - g.size() + 1);
  while (!a.empty()) {
    int k = degree(a) - degree(g);
    if (k < 0) throw std::logic_error("exact_divide: not divisible");
    auto [c, rem] = divmod(a.back(), g.back());
    if (!rem.empty()) throw std::logic_error("exact_divide: not divisible");
    for (std::size_t j = 0; j < g.size(); ++j) a[j + k] = sub(a[j + k], mul(c, g[j]));
    q[k] = std::move(c);
    trim(a);
  }
  trim(q);
  return q;
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return from_poly2(gcd_oriented(to_poly2(a), to_poly2(b)));
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) { canonicalize(); }

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int ns = num_.min_s(), nv = num_.min_v();
  const int ds = den_.min_s(), dv = den_.min_v();
  LaurentPoly n = num_.shifted(-ns, -nv);
  LaurentPoly d = den_.shifted(-ds, -dv);
  if (!d.is_constant() && !n.is_constant()) {
    Poly2 np = to_poly2(n), dp = to_poly2(d);
    Poly2 g = gcd_oriented(np, dp);
    if (g.size() > 1 || g.front().size() > 1) {
      n = from_poly2(exact_divide(std::move(np), g));
      d = from_poly2(exact_divide(std::move(dp), g));
    }
  }
  Rational inv = 1 / d.leading_term().second;
  num_ = n.shifted(ns - ds, nv - dv) * inv;
  den_ = d * inv;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute(const Substitution& sub) const {
  if (is_polynomial()) return RatFunc(num_.substitute(sub));
  return RatFunc(num_.substitute(sub), den_.substitute(sub));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (o.is_polynomial() && o.num_.is_constant()) return *this *= o.num_.coefficient(0, 0);
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc& RatFunc::operator*=(const Rational& c) {
  if (sgn(c) == 0) return *this = RatFunc();
  num_ *= c;
  return *this;
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return num_.to_string() + " / " + den_.to_string();
}

RatFunc RatFunc::parse(std::string_view text) {
  auto pos = text.find(" / ");
  if (pos == std::string_view::npos) return RatFunc(LaurentPoly::parse(text));
  return RatFunc(LaurentPoly::parse(text.substr(0, pos)), LaurentPoly::parse(text.substr(pos + 3)));
}

LaurentPoly as_laurent(const RatFunc& f) {
  if (f.is_polynomial()) return f.num();
  const LaurentPoly& num = f.num();
  const int ns = num.min_s(), nv = num.min_v();
  Poly2 r = to_poly2(num.shifted(-ns, -nv));
  Poly2 d = to_poly2(f.den());
  if (d.back().size() == 1) {
    // Leading s-coefficient is a rational constant: ordinary division.
    Rational inv = 1 / d.back().front();
    while (!r.empty() && degree(r) >= degree(d)) {
      int k = degree(r) - degree(d);
      UPoly c = scale(r.back(), inv);
      for (std::size_t j = 0; j < d.size(); ++j) r[j + k] = sub(r[j + k], mul(c, d[j]));
      trim(r);
    }
  } else {
    r = pseudo_remainder(std::move(r), d);
  }
  LaurentPoly rem = from_poly2(r).shifted(ns, nv);
  throw NotPolynomial("not a Laurent polynomial: " + f.to_string(), rem, f.den());
}

}  // namespace lmov
