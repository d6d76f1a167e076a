#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace lmov {

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Young diagram stored as weakly decreasing positive parts.
///
/// Ordering: by size first, then reverse lexicographic on the parts, so the
/// partitions of 3 come out as (3), (2,1), (1,1,1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return b.parts_ <=> a.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  /// "5,4,2,1"; the empty partition is "-".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

/// Centraliser order prod_j j^{m_j} m_j!; 1 for the empty partition.
std::int64_t z_order(const Partition& mu);

/// chi_A(C_mu) by the Murnaghan-Nakayama rule.  Memoised, thread-safe.
std::int64_t mn_character(const Partition& a, const Partition& mu);

Partition conjugate(const Partition& a);
/// Every part multiplied by d.
Partition scale(const Partition& mu, int d);
/// Every part divided by d; throws if some part is not divisible.
Partition divide(const Partition& mu, int d);
/// All d >= 1 dividing every part (ascending).  Empty partition: {1}.
std::vector<int> divisors(const Partition& mu);
/// Multiset union of parts: p_mu * p_nu = p_{mu u nu}.
Partition merge(const Partition& a, const Partition& b);

/// Classical Moebius function.
int mobius(int n);

/// Character table of S_n with rows indexed by irreducibles A and columns by
/// classes mu, both in canonical partition order.
struct CharacterTable {
  std::vector<Partition> partitions;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> chi;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> z;

  std::size_t index_of(const Partition& p) const;
};

const CharacterTable& character_table(int n);

/// An L-tuple of partitions (one per link component).
///
/// Ordering: total size, then component-wise lexicographic.
class PartitionVector {
 public:
  PartitionVector() = default;
  explicit PartitionVector(std::vector<Partition> entries) : entries_(std::move(entries)) {}
  PartitionVector(std::initializer_list<Partition> entries) : entries_(entries) {}
  static PartitionVector empty(int components) { return PartitionVector(std::vector<Partition>(components)); }

  int components() const { return static_cast<int>(entries_.size()); }
  const std::vector<Partition>& entries() const { return entries_; }
  const Partition& operator[](std::size_t i) const { return entries_[i]; }

  int size() const;
  int length() const;
  bool is_empty() const { return size() == 0; }
  std::vector<int> component_sizes() const;

  friend std::strong_ordering operator<=>(const PartitionVector& a, const PartitionVector& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa <=> sb;
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const PartitionVector& a, const PartitionVector& b) { return a.entries_ == b.entries_; }

  /// Components joined by '|', e.g. "2,1|-".
  std::string to_string() const;
  static PartitionVector parse(std::string_view text);

 private:
  std::vector<Partition> entries_;
};

std::int64_t z_order(const PartitionVector& mu);
std::int64_t mn_character(const PartitionVector& a, const PartitionVector& mu);
PartitionVector conjugate(const PartitionVector& a);
PartitionVector scale(const PartitionVector& mu, int d);
PartitionVector divide(const PartitionVector& mu, int d);
std::vector<int> divisors(const PartitionVector& mu);
PartitionVector merge(const PartitionVector& a, const PartitionVector& b);

/// Every L-tuple with component sizes exactly `sizes`, canonical order.
std::vector<PartitionVector> enumerate_block(const std::vector<int>& sizes);
/// Every L-tuple of total size 1..max_degree (0..max_degree with
/// include_empty), canonical order.
std::vector<PartitionVector> enumerate_vectors(int components, int max_degree, bool include_empty = false);
/// All component-size tuples with total in [1, max_degree].
std::vector<std::vector<int>> enumerate_size_tuples(int components, int max_degree);

}  // namespace lmov
