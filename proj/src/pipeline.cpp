#include "lmov/pipeline.hpp"

#include <algorithm>
#include <cstdlib>

namespace lmov {

namespace {

template <class Table>
Table filled_table(int components, int max_degree) {
  Table t;
  t.components = components;
  t.max_degree = max_degree;
  for (const auto& key : enumerate_vectors(components, max_degree)) t.entries.emplace(key, RatFunc{});
  return t;
}

PSeries<RatFunc> as_series(int components, int max_degree, const std::map<PartitionVector, RatFunc>& entries,
                           RatFunc constant) {
  PSeries<RatFunc> s(components, max_degree, std::move(constant));
  for (const auto& [key, value] : entries) s.set(key, value);
  return s;
}

Integer require_integer(const Rational& c, const std::string& where) {
  if (c.get_den() != 1)
    throw IntegralityError(IntegralityFailure::non_integer_coefficient,
                           "non-integer coefficient " + c.get_str() + " in " + where);
  return c.get_num();
}

}  // namespace

std::string to_string(IntegralityFailure f) {
  switch (f) {
    case IntegralityFailure::none: return "pass";
    case IntegralityFailure::not_polynomial: return "not-polynomial";
    case IntegralityFailure::half_integer_q_power: return "half-integer-q-power";
    case IntegralityFailure::asymmetric_q_part: return "asymmetric-q-part";
    case IntegralityFailure::non_integer_coefficient: return "non-integer-coefficient";
  }
  return "unknown";
}

void WTable::validate() const {
  if (components < 1) throw MissingDegrees("table needs at least one component");
  if (max_degree < 1) throw MissingDegrees("table needs max degree >= 1");
  for (const auto& key : enumerate_vectors(components, max_degree))
    if (!entries.count(key)) throw MissingDegrees("missing entry for " + key.to_string());
  for (const auto& [key, value] : entries)
    if (key.components() != components || key.is_empty() || key.size() > max_degree)
      throw MissingDegrees("entry " + key.to_string() + " does not fit the table shape");
}

WTable WTable::truncated(int degree) const {
  if (degree > max_degree)
    throw MissingDegrees("table '" + name + "' has degree " + std::to_string(max_degree) + ", asked for " +
                         std::to_string(degree));
  WTable out = *this;
  out.max_degree = degree;
  std::erase_if(out.entries, [degree](const auto& kv) { return kv.first.size() > degree; });
  return out;
}

SchurCoeffs<RatFunc> WTable::as_schur() const {
  SchurCoeffs<RatFunc> s(components, max_degree);
  for (const auto& [key, value] : entries) s.set(key, value);
  return s;
}

ZmuTable reformulate_Z(const WTable& w) {
  w.validate();
  const auto power = schur_to_power(w.as_schur());
  auto z = filled_table<ZmuTable>(w.components, w.max_degree);
  for (const auto& [key, value] : power.coefficients()) z.entries.at(key) = value;
  return z;
}

WTable reformulate_W(const ZmuTable& z) {
  const auto schur = power_to_schur(as_series(z.components, z.max_degree, z.entries, RatFunc{}));
  WTable w;
  w.components = z.components;
  w.max_degree = z.max_degree;
  for (const auto& key : enumerate_vectors(z.components, z.max_degree)) w.entries.emplace(key, schur.coefficient(key));
  return w;
}

FTable free_energy(const ZmuTable& z) {
  const auto log = log_series(as_series(z.components, z.max_degree, z.entries, RatFunc(1)));
  auto f = filled_table<FTable>(z.components, z.max_degree);
  for (const auto& [key, value] : log.coefficients()) f.entries.at(key) = value;
  return f;
}

fTable extract_f(const FTable& big_f) {
  fTable out;
  out.components = big_f.components;
  out.max_degree = big_f.max_degree;
  for (const auto& [mu, stored] : big_f.entries) {
    RatFunc raw;
    for (int d : divisors(mu)) {
      const int m = mobius(d);
      if (m == 0) continue;
      const PartitionVector base = divide(mu, d);
      const RatFunc base_raw = big_f.entries.at(base) * ratio(1, z_order(base));
      raw += base_raw.substitute(Substitution::adams(d)) * ratio(m, d);
    }
    out.power.emplace(mu, raw * Rational(z_order(mu)));
  }
  const auto schur = power_to_schur(as_series(out.components, out.max_degree, out.power, RatFunc{}));
  for (const auto& key : enumerate_vectors(out.components, out.max_degree)) out.schur.emplace(key, schur.coefficient(key));
  return out;
}

FTable resum_f(const fTable& f) {
  auto out = filled_table<FTable>(f.components, f.max_degree);
  for (auto& [nu, value] : out.entries) {
    RatFunc raw;
    for (int d : divisors(nu)) {
      const PartitionVector base = divide(nu, d);
      const RatFunc base_raw = f.power.at(base) * ratio(1, z_order(base));
      raw += base_raw.substitute(Substitution::adams(d)) * ratio(1, d);
    }
    value = raw * Rational(z_order(nu));
  }
  return out;
}

PTable compute_P(const fTable& f, PConvention convention) {
  SchurCoeffs<RatFunc> schur(f.components, f.max_degree);
  for (const auto& [key, value] : f.schur) schur.set(key, value);
  const auto image = transform_T(schur, convention == PConvention::literal_tinv);
  auto p = filled_table<PTable>(f.components, f.max_degree);
  for (const auto& [key, value] : image.coefficients()) p.entries.at(key) = value;
  return p;
}

IntegerRow decompose_genus_expansion(const LaurentPoly& scaled) {
  IntegerRow row;
  // Group by v-exponent; each slice is a Laurent polynomial in s.
  std::map<int, LaurentPoly> by_v;
  for (const auto& [m, c] : scaled.terms()) by_v[m.v].add_term(Monomial{m.s, 0}, c);
  const LaurentPoly one_squared = qnum(1) * qnum(1);
  for (auto& [b, part] : by_v) {
    for (const auto& [m, c] : part.terms()) {
      if (m.s % 2 != 0)
        throw IntegralityError(IntegralityFailure::half_integer_q_power,
                               "odd power s^" + std::to_string(m.s) + " at v^" + std::to_string(b));
      if (part.coefficient(-m.s, 0) != c)
        throw IntegralityError(IntegralityFailure::asymmetric_q_part,
                               "q-part at v^" + std::to_string(b) + " is not symmetric under q -> 1/q");
    }
    // Strip the top q-power with the matching [1]^{2g}; its top coefficient is 1.
    while (!part.is_zero()) {
      const auto& [top, c] = part.leading_term();
      const int g = top.s / 2;
      const Integer n = require_integer(c, "v^" + std::to_string(b));
      row.emplace(GenusCharge{g, b}, n);
      part -= one_squared.pow(static_cast<unsigned>(g)) * Rational(n);
    }
  }
  return row;
}

bool IntegralityReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); });
}

std::vector<PartitionVector> IntegralityReport::failing_keys() const {
  std::vector<PartitionVector> out;
  for (const auto& r : rows)
    if (!r.passed()) out.push_back(r.key);
  return out;
}

IntegralityReport check_integrality(const PTable& p) {
  IntegralityReport report;
  const RatFunc one_squared(qnum(1) * qnum(1));
  for (const auto& [key, value] : p.entries) {
    IntegralityRow row;
    row.key = key;
    const RatFunc scaled = value * one_squared;
    try {
      row.witness = as_laurent(scaled);
    } catch (const NotPolynomial& e) {
      row.failure = IntegralityFailure::not_polynomial;
      row.witness = e.remainder;
      report.rows.push_back(std::move(row));
      continue;
    }
    try {
      row.n_row = decompose_genus_expansion(row.witness);
    } catch (const IntegralityError& e) {
      row.failure = e.kind;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

NTable extract_N(const PTable& p) {
  NTable out;
  out.components = p.components;
  out.max_degree = p.max_degree;
  for (auto& row : check_integrality(p).rows) {
    if (!row.passed())
      throw IntegralityError(row.failure, "row " + row.key.to_string() + " fails integrality: " + to_string(row.failure));
    out.rows.emplace(row.key, std::move(row.n_row));
  }
  return out;
}

namespace {

// sum_{k=0}^{g} q^{g-2k}, written in s = q^{1/2}.
LaurentPoly spin_character(int g) {
  LaurentPoly out;
  for (int k = 0; k <= g; ++k) out.add_term(Monomial{2 * (g - 2 * k), 0}, 1);
  return out;
}

LaurentPoly genus_element(int g) { return (qnum(1) * qnum(1)).pow(static_cast<unsigned>(g)); }

// Both bases are triangular with top term q^g and leading coefficient 1, so
// peeling the top q-power gives the unique integer change of basis.
std::map<int, Integer> peel(LaurentPoly poly, LaurentPoly (*basis)(int)) {
  std::map<int, Integer> out;
  while (!poly.is_zero()) {
    const auto& [top, c] = poly.leading_term();
    if (top.s < 0 || top.s % 2 != 0) throw std::logic_error("change of basis: unexpected top power");
    if (c.get_den() != 1) throw IntegralityError(IntegralityFailure::non_integer_coefficient, "non-integer solution");
    const int g = top.s / 2;
    const Integer n = c.get_num();
    out.emplace(g, n);
    poly -= basis(g) * Rational(n);
  }
  return out;
}

}  // namespace

std::map<int, Integer> genus_to_spin_basis(const std::map<int, Integer>& n_by_genus) {
  LaurentPoly poly;
  for (const auto& [g, n] : n_by_genus) poly += genus_element(g) * Rational(n);
  return peel(std::move(poly), spin_character);
}

std::map<int, Integer> spin_to_genus_basis(const std::map<int, Integer>& n_by_spin) {
  LaurentPoly poly;
  for (const auto& [g, n] : n_by_spin) poly += spin_character(g) * Rational(n);
  return peel(std::move(poly), genus_element);
}

namespace {

IntegerRow change_row_basis(const IntegerRow& row, std::map<int, Integer> (*change)(const std::map<int, Integer>&)) {
  std::map<int, std::map<int, Integer>> by_charge;
  for (const auto& [key, value] : row) by_charge[key.two_q][key.g] = value;
  IntegerRow out;
  for (const auto& [two_q, by_g] : by_charge)
    for (const auto& [g, value] : change(by_g))
      if (value != 0) out.emplace(GenusCharge{g, two_q}, value);
  return out;
}

}  // namespace

nTable N_to_n(const NTable& big) {
  nTable out;
  out.components = big.components;
  out.max_degree = big.max_degree;
  for (const auto& [key, row] : big.rows) out.rows.emplace(key, change_row_basis(row, genus_to_spin_basis));
  return out;
}

NTable n_to_N(const nTable& small) {
  NTable out;
  out.components = small.components;
  out.max_degree = small.max_degree;
  for (const auto& [key, row] : small.rows) out.rows.emplace(key, change_row_basis(row, spin_to_genus_basis));
  return out;
}

CheckNTable compute_checkn(const nTable& n) {
  CheckNTable out;
  out.components = n.components;
  out.max_degree = n.max_degree;
  for (const auto& mu : enumerate_vectors(n.components, n.max_degree)) {
    RationalRow row;
    const Rational inv_z = ratio(1, z_order(mu));
    for (const auto& b : enumerate_block(mu.component_sizes())) {
      auto it = n.rows.find(b);
      if (it == n.rows.end()) throw std::invalid_argument("n table is missing row " + b.to_string());
      const std::int64_t chi = mn_character(b, mu);
      if (chi == 0) continue;
      for (const auto& [gq, value] : it->second) {
        Rational& slot = row[gq];
        slot += Rational(value) * Rational(chi) * inv_z;
      }
    }
    std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
    CheckNBounds bounds;
    for (const auto& [gq, value] : row) {
      bounds.g_max = std::max(bounds.g_max, gq.g);
      bounds.two_q_abs_max = std::max(bounds.two_q_abs_max, std::abs(gq.two_q));
    }
    out.bounds.emplace(mu, bounds);
    out.rows.emplace(mu, std::move(row));
  }
  return out;
}

PipelineResult run_pipeline(const WTable& w, PConvention convention) {
  PipelineResult r;
  r.convention = convention;
  r.z = reformulate_Z(w);
  r.f_energy = free_energy(r.z);
  r.f = extract_f(r.f_energy);
  r.p = compute_P(r.f, convention);
  r.integrality = check_integrality(r.p);
  r.big_n.components = r.small_n.components = w.components;
  r.big_n.max_degree = r.small_n.max_degree = w.max_degree;
  for (const auto& row : r.integrality.rows)
    if (row.passed()) r.big_n.rows.emplace(row.key, row.n_row);
  r.small_n = N_to_n(r.big_n);
  if (r.integrality.all_passed()) r.checkn = compute_checkn(r.small_n);
  return r;
}

}  // namespace lmov
