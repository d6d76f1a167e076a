#include "lmov/laurent.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace lmov {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s.front() == '-') ? 1 : 0;
  bool seen_slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash && i > start && i + 1 < s.size()) {
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  std::string out = sgn(r) < 0 ? "-" : "+";
  Integer n = abs(r.get_num());
  out += n.get_str();
  out += '/';
  out += r.get_den().get_str();
  return out;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(int s_exp, int v_exp, const Rational& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.emplace(Monomial{s_exp, v_exp}, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

bool LaurentPoly::is_v_free() const {
  for (const auto& [m, c] : terms_)
    if (m.v != 0) return false;
  return true;
}

bool LaurentPoly::is_s_free() const {
  for (const auto& [m, c] : terms_)
    if (m.s != 0) return false;
  return true;
}

Rational LaurentPoly::coefficient(int s_exp, int v_exp) const {
  auto it = terms_.find(Monomial{s_exp, v_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::s_slice(int s_exp) const {
  LaurentPoly out;
  auto it = terms_.lower_bound(Monomial{s_exp, std::numeric_limits<int>::min()});
  for (; it != terms_.end() && it->first.s == s_exp; ++it) out.terms_.emplace(Monomial{0, it->first.v}, it->second);
  return out;
}

namespace {
void require_nonzero(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("exponent extent of the zero polynomial");
}
}  // namespace

int LaurentPoly::min_s() const {
  require_nonzero(*this);
  return terms_.begin()->first.s;
}

int LaurentPoly::max_s() const {
  require_nonzero(*this);
  return terms_.rbegin()->first.s;
}

int LaurentPoly::min_v() const {
  require_nonzero(*this);
  int m = terms_.begin()->first.v;
  for (const auto& [mono, c] : terms_) m = std::min(m, mono.v);
  return m;
}

int LaurentPoly::max_v() const {
  require_nonzero(*this);
  int m = terms_.begin()->first.v;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.v);
  return m;
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading_term() const {
  require_nonzero(*this);
  return *terms_.rbegin();
}

LaurentPoly LaurentPoly::shifted(int ds, int dv) const {
  if (ds == 0 && dv == 0) return *this;
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.s + ds, m.v + dv}, c);
  return out;
}

LaurentPoly LaurentPoly::substitute(const Substitution& sub) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (sub.negate_v && (m.v % 2 != 0)) coeff = -coeff;
    out.add_term(Monomial{m.s * sub.s_scale, m.v * sub.v_scale}, coeff);
  }
  return out;
}

LaurentPoly LaurentPoly::truncated_s(int bound) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.s >= bound) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial{ma.s + mb.s, ma.v + mb.v}, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(m.s);
    out += ',';
    out += std::to_string(m.v);
    out += ':';
    out += format_rational(c);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  LaurentPoly out;
  bool any = false;
  while (in >> tok) {
    if (tok == "0" && !any) {
      any = true;
      continue;
    }
    auto comma = tok.find(',');
    auto colon = tok.find(':');
    if (comma == std::string::npos || colon == std::string::npos || colon < comma)
      throw std::invalid_argument("malformed term '" + tok + "'");
    int a = 0, b = 0;
    try {
      std::size_t used = 0;
      a = std::stoi(tok.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
      b = std::stoi(tok.substr(comma + 1, colon - comma - 1), &used);
      if (used != colon - comma - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponents in '" + tok + "'");
    }
    if (out.terms_.count(Monomial{a, b})) throw std::invalid_argument("repeated monomial in '" + tok + "'");
    Rational c = parse_rational(tok.substr(colon + 1));
    if (sgn(c) == 0) throw std::invalid_argument("explicit zero coefficient in '" + tok + "'");
    out.terms_.emplace(Monomial{a, b}, c);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty polynomial text");
  return out;
}

LaurentPoly qnum(int n) { return LaurentPoly::monomial(-n, 0) - LaurentPoly::monomial(n, 0); }

LaurentPoly vnum(int n) { return LaurentPoly::monomial(0, -n) - LaurentPoly::monomial(0, n); }

}  // namespace lmov
