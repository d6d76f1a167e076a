#pragma once

// Staged extraction of integer invariants from a table of colored HOMFLY
// values: W -> Z -> F -> f -> P -> N -> n -> checked-n.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmov/partition.hpp"
#include "lmov/ratfunc.hpp"
#include "lmov/series.hpp"

namespace lmov {

struct MissingDegrees : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Which matrix turns f_A into P_B.  `qrho` multiplies the power-sum side by
/// prod 1/[mu_j] (T evaluated at q^rho); `literal_tinv` uses T^{-1}(q^rho),
/// i.e. prod [mu_j].  Only `qrho` makes the infinite product reproduce the
/// partition function; the other is kept for comparison.
enum class PConvention { qrho, literal_tinv };

/// Colored invariants W_A(q, t) for every A with 1 <= |A| <= max_degree.
/// W of the all-empty tuple is 1 and is not stored.
struct WTable {
  std::string name = "unnamed";
  std::string framing = "standard";
  int components = 1;
  int max_degree = 0;
  std::map<PartitionVector, RatFunc> entries;

  /// Throws MissingDegrees unless every key of degree 1..max_degree is present.
  void validate() const;
  WTable truncated(int degree) const;
  SchurCoeffs<RatFunc> as_schur() const;
};

/// Keyed stage table; the tag keeps Z, F and P tables apart at compile time.
/// Zero rows are kept so every key of degree 1..max_degree is listed.
template <class Tag>
struct StageTable {
  int components = 1;
  int max_degree = 0;
  std::map<PartitionVector, RatFunc> entries;

  const RatFunc& at(const PartitionVector& key) const { return entries.at(key); }
  friend bool operator==(const StageTable&, const StageTable&) = default;
};

struct ZTag {};
struct FTag {};
struct PTag {};
using ZmuTable = StageTable<ZTag>;
using FTable = StageTable<FTag>;
using PTable = StageTable<PTag>;

/// Power-sum side f-hat_mu = sum_A chi_A(mu) f_A together with the Schur side f_A.
struct fTable {
  int components = 1;
  int max_degree = 0;
  std::map<PartitionVector, RatFunc> power;
  std::map<PartitionVector, RatFunc> schur;
};

/// Index (g, 2Q) of the integer invariants; Q is half-integral and kept doubled.
struct GenusCharge {
  int g = 0;
  int two_q = 0;
  auto operator<=>(const GenusCharge&) const = default;
};

using IntegerRow = std::map<GenusCharge, Integer>;
using RationalRow = std::map<GenusCharge, Rational>;

struct NTable {
  int components = 1;
  int max_degree = 0;
  std::map<PartitionVector, IntegerRow> rows;
};
struct nTable {
  int components = 1;
  int max_degree = 0;
  std::map<PartitionVector, IntegerRow> rows;
};

struct CheckNBounds {
  int g_max = -1;       // -1 when the row is identically zero
  int two_q_abs_max = -1;
};

struct CheckNTable {
  int components = 1;
  int max_degree = 0;
  std::map<PartitionVector, RationalRow> rows;
  std::map<PartitionVector, CheckNBounds> bounds;
};

enum class IntegralityFailure { none, not_polynomial, half_integer_q_power, asymmetric_q_part, non_integer_coefficient };
std::string to_string(IntegralityFailure f);

struct IntegralityError : std::domain_error {
  IntegralityError(IntegralityFailure k, const std::string& what) : std::domain_error(what), kind(k) {}
  IntegralityFailure kind;
};

struct IntegralityRow {
  PartitionVector key;
  IntegralityFailure failure = IntegralityFailure::none;
  /// [1]^2 P_B when it is a Laurent polynomial, otherwise the division remainder.
  LaurentPoly witness;
  IntegerRow n_row;  // N_{B; g, Q}; filled when the row passes
  bool passed() const { return failure == IntegralityFailure::none; }
};

struct IntegralityReport {
  std::vector<IntegralityRow> rows;
  bool all_passed() const;
  std::vector<PartitionVector> failing_keys() const;
};

ZmuTable reformulate_Z(const WTable& w);
/// W_A = sum_mu chi_A(mu) / z_mu Z_mu.
WTable reformulate_W(const ZmuTable& z);

FTable free_energy(const ZmuTable& z);
/// Moebius inversion of F-hat_nu = sum_{d | nu} (1/d) f-hat_{nu/d}(q^d, t^d),
/// written for raw power-sum coefficients (stored value / z).
fTable extract_f(const FTable& f);
/// The forward divisor sum; inverse of extract_f.
FTable resum_f(const fTable& f);

PTable compute_P(const fTable& f, PConvention convention = PConvention::qrho);

/// Decomposes one [1]^2 P_B into sum N_{g,Q} [1]^{2g} t^Q.  Throws IntegralityError.
IntegerRow decompose_genus_expansion(const LaurentPoly& scaled);
IntegralityReport check_integrality(const PTable& p);
/// Throws IntegralityError on the first failing row.
NTable extract_N(const PTable& p);

/// Rewrites sum_g N_g [1]^{2g} as sum_g n_g (q^g + q^{g-2} + ... + q^{-g}) for one
/// fixed Q (keys of the input map are g).
std::map<int, Integer> genus_to_spin_basis(const std::map<int, Integer>& n_by_genus);
std::map<int, Integer> spin_to_genus_basis(const std::map<int, Integer>& n_by_spin);

nTable N_to_n(const NTable& n);
NTable n_to_N(const nTable& n);

CheckNTable compute_checkn(const nTable& n);

struct PipelineResult {
  PConvention convention = PConvention::qrho;
  ZmuTable z;
  FTable f_energy;
  fTable f;
  PTable p;
  IntegralityReport integrality;
  NTable big_n;   // passing rows only
  nTable small_n;
  /// Present only when every row passed integrality.
  std::optional<CheckNTable> checkn;
};

PipelineResult run_pipeline(const WTable& w, PConvention convention = PConvention::qrho);

}  // namespace lmov
