#pragma once

// Infinite-product form of the partition function: building it from the
// checked-n table, expanding it as a truncated series, and comparing it with
// the partition function assembled directly from W.

#include <stdexcept>
#include <string>
#include <vector>

#include "lmov/pipeline.hpp"
#include "lmov/qseries.hpp"
#include "lmov/series.hpp"

namespace lmov {

struct TruncationOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// x-degree D and q-order Nq.  Series are compared on every s-power below
/// 2 * Nq + 1, i.e. through q^{Nq}.
struct Truncation {
  int degree = 3;
  int q_order = 12;
  std::int64_t precision() const { return 2 * static_cast<std::int64_t>(q_order) + 1; }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Defaults, overridden by LMOV_TRUNCATION="D,Nq" when set.  Throws
/// std::invalid_argument on a malformed value.
Truncation default_truncation();

/// `q` expands around q = 0, `q_inverse` around q = infinity.
enum class ProductMode { q, q_inverse };
Branch branch_of(ProductMode mode);
std::string to_string(ProductMode mode);
ProductMode parse_mode(std::string_view text);

struct ProductFactor {
  PartitionVector mu;
  int g = 0;
  int two_q = 0;
  Rational checkn;
};
/// (|mu|, mu, g, 2Q).
bool operator<(const ProductFactor& a, const ProductFactor& b);
bool operator==(const ProductFactor& a, const ProductFactor& b);

/// prod over factors, k = 0..g and m >= 1 of <1 - q^{g-2k+m} t^Q x^mu>^{-m * checkn};
/// the m- and k-indices are implicit.
struct ProductRep {
  int components = 1;
  std::vector<ProductFactor> factors;
  Truncation trunc;
  ProductMode mode = ProductMode::q;
};

using QPSeries = PSeries<QSeries>;

ProductRep build_product(const CheckNTable& cn, Truncation trunc, ProductMode mode = ProductMode::q);

/// exp of sum over factors and d of checkn/d * t^{dQ} sum_k q^{d(g-2k)} / [d]^2 p_{d mu},
/// every coefficient expanded through q^{Nq}.
QPSeries expand_product(const ProductRep& product);

/// 1 + sum_mu Z_mu / z_mu prod_j 1/[mu_j] p_mu(x), expanded through q^{Nq}.
QPSeries direct_Z(const WTable& w, Truncation trunc, ProductMode mode = ProductMode::q);

/// Quantum dimensions dim_q V_A for all |A| <= D.
WTable unknot_table(int max_degree);
/// Disjoint union: W of a tuple is the product of the component values.  Each
/// part must be a one-component table of degree >= max_degree.
WTable split_union(const std::vector<WTable>& parts, int max_degree);
/// A one-component series viewed in component `index` of an L-component one.
QPSeries embed_component(const QPSeries& s, int index, int components);

/// prod_{m >= 1} prod_i (1 - q^m t^{1/2} x_i)^m / (1 - q^m t^{-1/2} x_i)^m built
/// factor by factor from elementary and complete symmetric series.
QPSeries unknot_closed_product(Truncation trunc);

/// Every coefficient cut to `precision`.  Throws std::logic_error if some
/// coefficient is not known that far.
QPSeries truncate_series(const QPSeries& s, std::int64_t precision);

struct Residual {
  PartitionVector key;  // all-empty tuple for the constant term
  int u_power = 0;
  int v_power = 0;
  Rational difference;
};

/// Term-by-term a - b below u^precision.
std::vector<Residual> compare_series(const QPSeries& a, const QPSeries& b, std::int64_t precision);

struct RoundTripReport {
  Truncation trunc;
  ProductMode mode = ProductMode::q;
  bool integrality_passed = true;
  std::vector<PartitionVector> failing_keys;
  std::size_t factor_count = 0;
  std::vector<Residual> residuals;
  bool passed() const { return integrality_passed && residuals.empty(); }
  /// Largest |difference| over all residuals; zero when there are none.
  Rational max_discrepancy() const;
};

RoundTripReport roundtrip_verify(const WTable& w, Truncation trunc, ProductMode mode = ProductMode::q);
/// Compares against a product built from the given table instead of the one
/// the pipeline produces.
RoundTripReport roundtrip_verify(const WTable& w, const CheckNTable& cn, Truncation trunc,
                                 ProductMode mode = ProductMode::q);

struct SymmetryCheck {
  std::string name;
  bool holds = true;
  std::size_t checked = 0;
  /// First key where the identity fails.
  std::string witness;
};

struct SymmetryReport {
  std::vector<SymmetryCheck> checks;
  bool all_hold() const;
};

/// (a) q <-> 1/q of the product, (b) rank-level duality, (c-I)/(c-II) its strong
/// forms, (d) N transpose symmetry, (e) checked-n sign symmetry.
SymmetryReport symmetry_checks(const WTable& w, const PipelineResult& result, Truncation trunc);

}  // namespace lmov
