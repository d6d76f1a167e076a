#pragma once

// Truncated generating series in power sums p_mu(x^1) ... p_mu(x^L), and the
// Schur-basis coefficient tables they are built from.  Templated on the
// coefficient ring so the same machinery runs on exact rational functions and
// on truncated q-series.

#include <concepts>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "lmov/eigen_support.hpp"
#include "lmov/partition.hpp"
#include "lmov/qseries.hpp"
#include "lmov/ratfunc.hpp"

namespace lmov {

inline bool exact_zero(const RatFunc& f) { return f.is_zero(); }
inline bool exact_zero(const QSeries& f) { return f.is_zero() && f.is_exact(); }

template <class S>
concept SeriesScalar = std::regular<S> && requires(S a, const S b, const Rational r) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a * r } -> std::convertible_to<S>;
  { exact_zero(b) } -> std::convertible_to<bool>;
  S(r);
};

struct BadConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

/// sum over mu of (c_mu / z_mu) p_mu(x), truncated at total degree D, plus a
/// constant.  c_mu is stored: the 1/z_mu normalisation is implicit, so a
/// series built from Z_mu stores Z_mu itself.
template <SeriesScalar S>
class PSeries {
 public:
  using Coefficients = std::map<PartitionVector, S>;

  PSeries(int components, int max_degree, S constant = S(Rational(0)))
      : components_(components), max_degree_(max_degree), constant_(std::move(constant)) {
    if (components < 1) throw std::invalid_argument("PSeries needs at least one component");
    if (max_degree < 0) throw std::invalid_argument("PSeries degree must be nonnegative");
  }

  int components() const { return components_; }
  int max_degree() const { return max_degree_; }
  /// Set once some operation had to drop terms above max_degree.
  bool truncated() const { return truncated_; }
  const S& constant() const { return constant_; }
  const Coefficients& coefficients() const { return coeffs_; }

  S coefficient(const PartitionVector& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? S(Rational(0)) : it->second;
  }
  S raw_coefficient(const PartitionVector& mu) const { return coefficient(mu) * ratio(1, z_order(mu)); }

  void set_constant(S c) { constant_ = std::move(c); }

  /// Returns false (and raises the truncation flag) when mu is above max_degree.
  bool set(const PartitionVector& mu, S c) {
    if (!admit(mu)) return false;
    if (exact_zero(c))
      coeffs_.erase(mu);
    else
      coeffs_.insert_or_assign(mu, std::move(c));
    return true;
  }
  bool add(const PartitionVector& mu, const S& c) {
    if (!admit(mu)) return false;
    auto it = coeffs_.find(mu);
    if (it == coeffs_.end()) {
      if (!exact_zero(c)) coeffs_.emplace(mu, c);
    } else {
      it->second = it->second + c;
      if (exact_zero(it->second)) coeffs_.erase(it);
    }
    return true;
  }
  bool add_raw(const PartitionVector& mu, const S& raw) { return add(mu, raw * Rational(z_order(mu))); }
  void mark_truncated() { truncated_ = true; }

  PSeries& operator+=(const PSeries& o) {
    require_compatible(o);
    constant_ = constant_ + o.constant_;
    for (const auto& [mu, c] : o.coeffs_) add(mu, c);
    truncated_ = truncated_ || o.truncated_;
    return *this;
  }
  PSeries& operator-=(const PSeries& o) { return *this += o * Rational(-1); }
  PSeries& operator*=(const Rational& r) {
    constant_ = constant_ * r;
    Coefficients scaled;
    for (auto& [mu, c] : coeffs_) {
      S x = c * r;
      if (!exact_zero(x)) scaled.emplace(mu, std::move(x));
    }
    coeffs_ = std::move(scaled);
    return *this;
  }
  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator*(PSeries a, const Rational& r) { return a *= r; }

  /// Product in the power-sum algebra, p_mu p_nu = p_{mu u nu}, truncated at D.
  friend PSeries operator*(const PSeries& a, const PSeries& b) {
    a.require_compatible(b);
    PSeries out(a.components_, a.max_degree_, a.constant_ * b.constant_);
    out.truncated_ = a.truncated_ || b.truncated_;
    for (const auto& [mu, c] : a.coeffs_) out.add(mu, c * b.constant_);
    for (const auto& [nu, c] : b.coeffs_) out.add(nu, a.constant_ * c);
    for (const auto& [mu, ca] : a.coeffs_) {
      const Rational za = ratio(1, z_order(mu));
      for (const auto& [nu, cb] : b.coeffs_) {
        if (mu.size() + nu.size() > a.max_degree_) {
          out.truncated_ = true;
          continue;
        }
        const PartitionVector key = merge(mu, nu);
        out.add(key, (ca * cb) * (za * ratio(z_order(key), z_order(nu))));
      }
    }
    return out;
  }

  friend bool operator==(const PSeries& a, const PSeries& b) {
    return a.components_ == b.components_ && a.max_degree_ == b.max_degree_ && a.constant_ == b.constant_ &&
           a.coeffs_ == b.coeffs_;
  }

  void require_compatible(const PSeries& o) const {
    if (components_ != o.components_)
      throw std::invalid_argument("series with " + std::to_string(components_) + " and " +
                                  std::to_string(o.components_) + " components");
    if (max_degree_ != o.max_degree_) throw std::invalid_argument("series truncated at different degrees");
  }

 private:
  bool admit(const PartitionVector& mu) {
    if (mu.components() != components_)
      throw std::invalid_argument("key " + mu.to_string() + " has the wrong number of components");
    if (mu.is_empty()) throw std::invalid_argument("the constant term is not a keyed coefficient");
    if (mu.size() > max_degree_) {
      truncated_ = true;
      return false;
    }
    return true;
  }

  int components_;
  int max_degree_;
  S constant_;
  Coefficients coeffs_;
  bool truncated_ = false;
};

/// sum over A of c_A s_A(x), truncated at total degree D.
template <SeriesScalar S>
class SchurCoeffs {
 public:
  using Coefficients = std::map<PartitionVector, S>;

  SchurCoeffs(int components, int max_degree) : components_(components), max_degree_(max_degree) {}

  int components() const { return components_; }
  int max_degree() const { return max_degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  S coefficient(const PartitionVector& a) const {
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? S(Rational(0)) : it->second;
  }
  void set(const PartitionVector& a, S c) {
    if (a.components() != components_ || a.is_empty() || a.size() > max_degree_)
      throw std::invalid_argument("Schur key " + a.to_string() + " outside the table shape");
    if (exact_zero(c))
      coeffs_.erase(a);
    else
      coeffs_.insert_or_assign(a, std::move(c));
  }

  friend bool operator==(const SchurCoeffs& a, const SchurCoeffs& b) {
    return a.components_ == b.components_ && a.max_degree_ == b.max_degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int components_;
  int max_degree_;
  Coefficients coeffs_;
};

/// Character matrix of one block of component sizes: entry (A, mu) is
/// chi_A(C_mu), rows and columns ordered as enumerate_block(sizes).  This is the
/// Kronecker product of the per-component character tables.
struct BlockCharacters {
  std::vector<PartitionVector> keys;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> chi;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> z;
};
const BlockCharacters& block_characters(const std::vector<int>& sizes);

/// c_A s_A  ->  sum_mu (sum_A chi_A(mu) c_A) / z_mu p_mu.
template <SeriesScalar S>
PSeries<S> schur_to_power(const SchurCoeffs<S>& schur) {
  PSeries<S> out(schur.components(), schur.max_degree());
  for (const auto& sizes : enumerate_size_tuples(schur.components(), schur.max_degree())) {
    const auto& block = block_characters(sizes);
    const auto n = static_cast<Eigen::Index>(block.keys.size());
    for (Eigen::Index j = 0; j < n; ++j) {
      S acc(Rational(0));
      for (Eigen::Index i = 0; i < n; ++i) {
        if (block.chi(i, j) == 0) continue;
        const S c = schur.coefficient(block.keys[static_cast<std::size_t>(i)]);
        if (exact_zero(c)) continue;
        acc = acc + c * Rational(block.chi(i, j));
      }
      out.set(block.keys[static_cast<std::size_t>(j)], std::move(acc));
    }
  }
  return out;
}

/// Inverse of schur_to_power via column orthogonality.  The constant term is
/// ignored.
template <SeriesScalar S>
SchurCoeffs<S> power_to_schur(const PSeries<S>& power) {
  SchurCoeffs<S> out(power.components(), power.max_degree());
  for (const auto& sizes : enumerate_size_tuples(power.components(), power.max_degree())) {
    const auto& block = block_characters(sizes);
    const auto n = static_cast<Eigen::Index>(block.keys.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      S acc(Rational(0));
      for (Eigen::Index j = 0; j < n; ++j) {
        if (block.chi(i, j) == 0) continue;
        const S c = power.coefficient(block.keys[static_cast<std::size_t>(j)]);
        if (exact_zero(c)) continue;
        acc = acc + c * ratio(block.chi(i, j), block.z(j));
      }
      out.set(block.keys[static_cast<std::size_t>(i)], std::move(acc));
    }
  }
  return out;
}

template <SeriesScalar S>
PSeries<S> exp_series(const PSeries<S>& f) {
  if (!exact_zero(f.constant())) throw BadConstantTerm("exp_series needs a vanishing constant term");
  PSeries<S> result(f.components(), f.max_degree(), S(Rational(1)));
  PSeries<S> term = result;
  for (int k = 1; k <= f.max_degree(); ++k) {
    term = (term * f) * ratio(1, k);
    result += term;
  }
  if (f.truncated()) result.mark_truncated();
  return result;
}

template <SeriesScalar S>
PSeries<S> log_series(const PSeries<S>& z) {
  if (!exact_zero(z.constant() - S(Rational(1)))) throw BadConstantTerm("log_series needs constant term 1");
  PSeries<S> u = z;
  u.set_constant(S(Rational(0)));
  PSeries<S> result(z.components(), z.max_degree());
  PSeries<S> power(z.components(), z.max_degree(), S(Rational(1)));
  for (int k = 1; k <= z.max_degree(); ++k) {
    power = power * u;
    result += power * ratio(k % 2 == 1 ? 1 : -1, k);
  }
  if (z.truncated()) result.mark_truncated();
  return result;
}

/// p_mu(x) -> p_mu(x^d) = p_{d mu}(x).  Keys pushed above D are dropped and
/// the truncation flag is raised.
template <SeriesScalar S>
PSeries<S> adams_x(const PSeries<S>& p, int d) {
  if (d < 1) throw std::invalid_argument("adams_x: d must be >= 1");
  PSeries<S> out(p.components(), p.max_degree(), p.constant());
  if (p.truncated()) out.mark_truncated();
  for (const auto& [mu, c] : p.coefficients()) {
    const PartitionVector key = scale(mu, d);
    out.add(key, c * ratio(z_order(key), z_order(mu)));
  }
  return out;
}

/// (q, t) -> (q^d, t^d) on every coefficient.
PSeries<RatFunc> adams_qt(const PSeries<RatFunc>& p, int d);

enum class QrhoDirection { y_to_x, x_to_y };

/// prod over all parts of 1/[part] (y_to_x) or [part] (x_to_y): the value of
/// p_mu(q^rho) and its reciprocal.
RatFunc qrho_weight(const PartitionVector& mu, QrhoDirection direction);

/// Rewrites a series in y = x * q^rho as a series in x, or back.
PSeries<RatFunc> specialize_qrho(const PSeries<RatFunc>& p, QrhoDirection direction);

/// Matrix T_{AB}(q^rho) (or its inverse) on one block of component sizes,
/// assembled as X W X^T with X the block character matrix and
/// W = diag(weight_mu / z_mu).
RatMatrix transform_matrix(const std::vector<int>& sizes, bool inverse);

/// c_A -> sum_B T_{AB}(q^rho) c_B, blockwise.  With inverse = true uses T^{-1}.
SchurCoeffs<RatFunc> transform_T(const SchurCoeffs<RatFunc>& s, bool inverse);

}  // namespace lmov
