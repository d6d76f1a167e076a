#include "lmov/product.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace lmov {

namespace {

constexpr std::int64_t kMaxPrecision = 1'000'000;

bool parse_int(std::string_view text, int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

std::int64_t min_precision(const QPSeries& s) {
  std::int64_t p = s.constant().precision();
  for (const auto& [key, c] : s.coefficients()) p = std::min(p, c.precision());
  return p;
}

int sign_of_parity(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

Truncation default_truncation() {
  Truncation t;
  const char* env = std::getenv("LMOV_TRUNCATION");
  if (env == nullptr || *env == '\0') return t;
  const std::string_view text(env);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || !parse_int(text.substr(0, comma), t.degree) ||
      !parse_int(text.substr(comma + 1), t.q_order) || t.degree < 0 || t.q_order < 0)
    throw std::invalid_argument("LMOV_TRUNCATION must look like \"D,Nq\", got \"" + std::string(text) + "\"");
  return t;
}

Branch branch_of(ProductMode mode) { return mode == ProductMode::q ? Branch::ascending : Branch::descending; }

std::string to_string(ProductMode mode) { return mode == ProductMode::q ? "q" : "qinv"; }

ProductMode parse_mode(std::string_view text) {
  if (text == "q") return ProductMode::q;
  if (text == "qinv") return ProductMode::q_inverse;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected q or qinv)");
}

bool operator<(const ProductFactor& a, const ProductFactor& b) {
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.g != b.g) return a.g < b.g;
  return a.two_q < b.two_q;
}

bool operator==(const ProductFactor& a, const ProductFactor& b) {
  return a.mu == b.mu && a.g == b.g && a.two_q == b.two_q && a.checkn == b.checkn;
}

ProductRep build_product(const CheckNTable& cn, Truncation trunc, ProductMode mode) {
  ProductRep rep;
  rep.components = cn.components;
  rep.trunc = trunc;
  rep.mode = mode;
  for (const auto& [mu, row] : cn.rows)
    for (const auto& [gq, value] : row)
      if (sgn(value) != 0) rep.factors.push_back({mu, gq.g, gq.two_q, value});
  std::sort(rep.factors.begin(), rep.factors.end());
  return rep;
}

QPSeries truncate_series(const QPSeries& s, std::int64_t precision) {
  auto cut = [precision](const QSeries& c) {
    if (c.precision() < precision)
      throw std::logic_error("series known only below u^" + std::to_string(c.precision()) + ", need u^" +
                             std::to_string(precision));
    return c.truncated(precision);
  };
  QPSeries out(s.components(), s.max_degree(), s.constant().is_exact() ? s.constant() : cut(s.constant()));
  for (const auto& [key, c] : s.coefficients()) out.set(key, cut(c));
  return out;
}

QPSeries expand_product(const ProductRep& product) {
  const int degree = product.trunc.degree;
  const std::int64_t target = product.trunc.precision();
  const Branch branch = branch_of(product.mode);

  // Negative q-powers of the k-sum eat into the precision of every product, so
  // start with that much headroom and widen it until the result reaches target.
  std::int64_t margin = 0;
  for (const auto& f : product.factors) {
    if (f.g < 0) throw std::invalid_argument("product factor with negative genus");
    const std::int64_t reach = static_cast<std::int64_t>(degree) * std::max(f.g, std::abs(f.two_q));
    if (reach > std::numeric_limits<int>::max() / 4)
      throw TruncationOverflow("product factor exponents exceed the representable range");
    margin = std::max(margin, 2 * static_cast<std::int64_t>(degree) * f.g);
  }

  for (;;) {
    if (target + margin > kMaxPrecision)
      throw TruncationOverflow("product expansion needs precision " + std::to_string(target + margin));
    std::map<int, QSeries> weights;
    auto weight = [&](int d) -> const QSeries& {
      auto it = weights.find(d);
      if (it != weights.end()) return it->second;
      const RatFunc w(LaurentPoly(1), qnum(d) * qnum(d));
      return weights.emplace(d, expand_to_precision(w, target + margin, branch)).first->second;
    };

    QPSeries log(product.components, degree);
    for (const auto& f : product.factors) {
      for (int d = 1; d * f.mu.size() <= degree; ++d) {
        LaurentPoly k_sum;
        for (int k = 0; k <= f.g; ++k) k_sum.add_term(Monomial{2 * d * (f.g - 2 * k), d * f.two_q}, 1);
        const QSeries term = QSeries::exact(k_sum, branch) * weight(d) * (f.checkn * ratio(1, d));
        log.add_raw(scale(f.mu, d), term);
      }
    }
    const QPSeries result = exp_series(log);
    const std::int64_t reached = min_precision(result);
    if (reached >= target) return truncate_series(result, target);
    margin += target - reached;
  }
}

QPSeries direct_Z(const WTable& w, Truncation trunc, ProductMode mode) {
  const WTable cut = w.truncated(trunc.degree);
  const ZmuTable z = reformulate_Z(cut);
  QPSeries out(cut.components, cut.max_degree, QSeries(1));
  for (const auto& [key, value] : z.entries) {
    const RatFunc y_to_x = value * qrho_weight(key, QrhoDirection::y_to_x);
    out.set(key, expand_to_precision(y_to_x, trunc.precision(), branch_of(mode)));
  }
  return out;
}

WTable unknot_table(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("unknot table needs degree >= 1");
  WTable w;
  w.name = "unknot";
  w.components = 1;
  w.max_degree = max_degree;
  for (int n = 1; n <= max_degree; ++n) {
    const CharacterTable& table = character_table(n);
    std::vector<RatFunc> class_values;
    for (const auto& mu : table.partitions) {
      LaurentPoly num(1), den(1);
      for (int part : mu.parts()) {
        num *= vnum(part);
        den *= qnum(part);
      }
      class_values.push_back(RatFunc(num, den) * ratio(1, z_order(mu)));
    }
    for (std::size_t a = 0; a < table.partitions.size(); ++a) {
      RatFunc value;
      for (std::size_t j = 0; j < class_values.size(); ++j) {
        const auto chi = table.chi(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j));
        if (chi != 0) value += class_values[j] * Rational(chi);
      }
      w.entries.emplace(PartitionVector{table.partitions[a]}, std::move(value));
    }
  }
  return w;
}

WTable split_union(const std::vector<WTable>& parts, int max_degree) {
  if (parts.empty()) throw std::invalid_argument("split union of no tables");
  WTable w;
  w.components = static_cast<int>(parts.size());
  w.max_degree = max_degree;
  w.name.clear();
  for (const auto& p : parts) {
    if (p.components != 1) throw std::invalid_argument("split union expects one-component tables");
    if (p.max_degree < max_degree) throw MissingDegrees("table '" + p.name + "' is too short for the split union");
    w.name += (w.name.empty() ? "" : "+") + p.name;
  }
  for (const auto& key : enumerate_vectors(w.components, max_degree)) {
    RatFunc value(1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!key[i].empty()) value *= parts[i].entries.at(PartitionVector{key[i]});
    w.entries.emplace(key, std::move(value));
  }
  return w;
}

QPSeries embed_component(const QPSeries& s, int index, int components) {
  if (s.components() != 1) throw std::invalid_argument("embed_component expects a one-component series");
  if (index < 0 || index >= components) throw std::out_of_range("component index out of range");
  QPSeries out(components, s.max_degree(), s.constant());
  for (const auto& [key, c] : s.coefficients()) {
    std::vector<Partition> entries(static_cast<std::size_t>(components));
    entries[static_cast<std::size_t>(index)] = key[0];
    out.set(PartitionVector(std::move(entries)), c);
  }
  return out;
}

QPSeries unknot_closed_product(Truncation trunc) {
  const std::int64_t precision = trunc.precision();
  QPSeries result(1, trunc.degree, QSeries(1));
  for (int m = 1; 2 * static_cast<std::int64_t>(m) < precision; ++m) {
    // prod_i (1 - a x_i) has p_mu-coefficient (-1)^{l(mu)} a^{|mu|} / z_mu and
    // prod_i 1/(1 - b x_i) has b^{|mu|} / z_mu, with a = q^m t^{1/2}, b = q^m t^{-1/2}.
    QPSeries e(1, trunc.degree, QSeries(1));
    QPSeries h(1, trunc.degree, QSeries(1));
    for (const auto& mu : enumerate_vectors(1, trunc.degree)) {
      const int n = mu.size();
      e.set(mu, QSeries::exact(LaurentPoly::monomial(2 * m * n, n, sign_of_parity(mu.length())), Branch::ascending));
      h.set(mu, QSeries::exact(LaurentPoly::monomial(2 * m * n, -n), Branch::ascending));
    }
    const QPSeries factor = truncate_series(e * h, precision);
    for (int j = 0; j < m; ++j) result = truncate_series(result * factor, precision);
  }
  return truncate_series(result, precision);
}

std::vector<Residual> compare_series(const QPSeries& a, const QPSeries& b, std::int64_t precision) {
  a.require_compatible(b);
  std::vector<PartitionVector> keys{PartitionVector::empty(a.components())};
  for (const auto& [key, c] : a.coefficients()) keys.push_back(key);
  for (const auto& [key, c] : b.coefficients()) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<Residual> out;
  for (const auto& key : keys) {
    const QSeries ca = key.is_empty() ? a.constant() : a.coefficient(key);
    const QSeries cb = key.is_empty() ? b.constant() : b.coefficient(key);
    if (ca.precision() < precision || cb.precision() < precision)
      throw std::logic_error("coefficient of " + key.to_string() + " is not known through u^" +
                             std::to_string(precision - 1));
    const QSeries diff = (ca - cb).truncated(precision);
    for (const auto& [m, c] : diff.body().terms()) out.push_back({key, m.s, m.v, c});
  }
  return out;
}

Rational RoundTripReport::max_discrepancy() const {
  Rational best(0);
  for (const auto& r : residuals) best = std::max(best, Rational(abs(r.difference)));
  return best;
}

RoundTripReport roundtrip_verify(const WTable& w, const CheckNTable& cn, Truncation trunc, ProductMode mode) {
  RoundTripReport report;
  report.trunc = trunc;
  report.mode = mode;
  const ProductRep product = build_product(cn, trunc, mode);
  report.factor_count = product.factors.size();
  report.residuals = compare_series(direct_Z(w, trunc, mode), expand_product(product), trunc.precision());
  return report;
}

RoundTripReport roundtrip_verify(const WTable& w, Truncation trunc, ProductMode mode) {
  const PipelineResult result = run_pipeline(w.truncated(trunc.degree));
  if (!result.checkn) {
    RoundTripReport report;
    report.trunc = trunc;
    report.mode = mode;
    report.integrality_passed = false;
    report.failing_keys = result.integrality.failing_keys();
    return report;
  }
  return roundtrip_verify(w, *result.checkn, trunc, mode);
}

bool SymmetryReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

namespace {

void record(SymmetryCheck& check, bool ok, const std::string& where) {
  ++check.checked;
  if (!ok && check.holds) {
    check.holds = false;
    check.witness = where;
  }
}

template <class Row>
Row reflect_charge(const Row& row, int sign) {
  Row out;
  for (const auto& [gq, value] : row) out.emplace(GenusCharge{gq.g, -gq.two_q}, value * sign);
  return out;
}

}  // namespace

SymmetryReport symmetry_checks(const WTable& w, const PipelineResult& result, Truncation trunc) {
  SymmetryReport report;

  SymmetryCheck mode{"q-inverse", true, 0, {}};
  if (!result.checkn) {
    record(mode, false, "integrality failed; no product to expand");
  } else {
    Truncation t = trunc;
    t.degree = std::min(t.degree, result.checkn->max_degree);
    const QPSeries up = expand_product(build_product(*result.checkn, t, ProductMode::q));
    const QPSeries down = expand_product(build_product(*result.checkn, t, ProductMode::q_inverse));
    record(mode, up.constant().body() == down.constant().body(), "constant");
    for (const auto& key : enumerate_vectors(up.components(), up.max_degree())) {
      const QSeries a = up.coefficient(key), b = down.coefficient(key);
      record(mode, a.body() == b.body() && a.precision() == b.precision(), key.to_string());
    }
  }
  report.checks.push_back(mode);

  const Substitution inv = Substitution::invert_s();
  const Substitution neg = Substitution::negate_v_sign();
  SymmetryCheck rank_level{"rank-level", true, 0, {}};
  SymmetryCheck strong_one{"strong-rank-level-I", true, 0, {}};
  SymmetryCheck strong_two{"strong-rank-level-II", true, 0, {}};
  for (const auto& [a, value] : w.entries) {
    const RatFunc& transposed = w.entries.at(conjugate(a));
    const Rational sign(sign_of_parity(a.size()));
    record(rank_level, transposed.substitute(inv.compose(neg)) == value, a.to_string());
    record(strong_one, transposed.substitute(inv) == value * sign, a.to_string());
    record(strong_two, value.substitute(neg) == value * sign, a.to_string());
  }
  report.checks.push_back(rank_level);
  report.checks.push_back(strong_one);
  report.checks.push_back(strong_two);

  SymmetryCheck n_sym{"N-transpose", true, 0, {}};
  for (const auto& [a, row] : result.big_n.rows) {
    auto it = result.big_n.rows.find(conjugate(a));
    if (it == result.big_n.rows.end()) continue;
    record(n_sym, it->second == reflect_charge(row, sign_of_parity(a.size())), a.to_string());
  }
  if (!result.integrality.all_passed()) record(n_sym, false, "integrality failed on some rows");
  report.checks.push_back(n_sym);

  SymmetryCheck checkn_sym{"checkn-charge", true, 0, {}};
  if (!result.checkn) {
    record(checkn_sym, false, "integrality failed; no checked-n table");
  } else {
    for (const auto& [mu, row] : result.checkn->rows)
      record(checkn_sym, row == reflect_charge(row, sign_of_parity(mu.length())), mu.to_string());
  }
  report.checks.push_back(checkn_sym);
  return report;
}

}  // namespace lmov
