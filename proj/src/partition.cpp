#include "lmov/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace lmov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text == "-") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Reverse lexicographic successor: find the rightmost part > 1, decrement it,
  // and redistribute the remainder greedily.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = --a.back();
    int rem = ones + 1;
    while (rem > 0) {
      int part = std::min(k, rem);
      a.push_back(part);
      rem -= part;
    }
  }
  return out;
}

std::int64_t z_order(const Partition& mu) {
  std::int64_t z = 1;
  const auto& p = mu.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    for (std::size_t m = 1; m <= j - i; ++m) z *= static_cast<std::int64_t>(p[i]) * static_cast<std::int64_t>(m);
    i = j;
  }
  return z;
}

namespace {

using CharacterKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<CharacterKey, std::int64_t> values;
};

CharacterMemo& memo() {
  static CharacterMemo m;
  return m;
}

// Recursion on beta-sets: removing a rim hook of length r is moving one bead
// from b to b - r; the sign counts beads jumped over.
std::int64_t mn_recursive(const std::vector<int>& shape, const std::vector<int>& classes, std::size_t from) {
  if (from == classes.size()) return shape.empty() ? 1 : 0;
  CharacterKey key{shape, std::vector<int>(classes.begin() + static_cast<std::ptrdiff_t>(from), classes.end())};
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }
  const int r = classes[from];
  const int len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int jumped = 0;
    for (int x : beta)
      if (x > nb && x < b) ++jumped;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = nb;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int j = 0; j < len; ++j) {
      int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    std::int64_t sub = mn_recursive(smaller, classes, from + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  {
    std::unique_lock lock(memo().mutex);
    memo().values.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& a, const Partition& mu) {
  if (a.size() != mu.size())
    throw SizeMismatch("character of " + a.to_string() + " on class " + mu.to_string() + ": sizes differ");
  return mn_recursive(a.parts(), mu.parts(), 0);
}

Partition conjugate(const Partition& a) {
  std::vector<int> cols;
  if (!a.empty()) {
    cols.resize(static_cast<std::size_t>(a[0]));
    for (int part : a.parts())
      for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

Partition scale(const Partition& mu, int d) {
  if (d < 1) throw std::invalid_argument("scale: d must be >= 1");
  std::vector<int> parts = mu.parts();
  for (int& p : parts) p *= d;
  return Partition(std::move(parts));
}

Partition divide(const Partition& mu, int d) {
  if (d < 1) throw std::invalid_argument("divide: d must be >= 1");
  std::vector<int> parts = mu.parts();
  for (int& p : parts) {
    if (p % d != 0) throw std::invalid_argument("divide: " + mu.to_string() + " not divisible by " + std::to_string(d));
    p /= d;
  }
  return Partition(std::move(parts));
}

std::vector<int> divisors(const Partition& mu) {
  int g = 0;
  for (int p : mu.parts()) g = std::gcd(g, p);
  if (g == 0) return {1};
  std::vector<int> out;
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) out.push_back(d);
  return out;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::lower_bound(partitions.begin(), partitions.end(), p);
  if (it == partitions.end() || !(*it == p)) throw SizeMismatch("partition " + p.to_string() + " not in table");
  return static_cast<std::size_t>(it - partitions.begin());
}

const CharacterTable& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, CharacterTable> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  CharacterTable t;
  t.partitions = enumerate_partitions(n);
  const auto k = static_cast<Eigen::Index>(t.partitions.size());
  t.chi.resize(k, k);
  t.z.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    t.z(i) = z_order(t.partitions[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < k; ++j)
      t.chi(i, j) = mn_character(t.partitions[static_cast<std::size_t>(i)], t.partitions[static_cast<std::size_t>(j)]);
  }
  return tables.emplace(n, std::move(t)).first->second;
}

int PartitionVector::size() const {
  int s = 0;
  for (const auto& p : entries_) s += p.size();
  return s;
}

int PartitionVector::length() const {
  int s = 0;
  for (const auto& p : entries_) s += p.length();
  return s;
}

std::vector<int> PartitionVector::component_sizes() const {
  std::vector<int> out;
  for (const auto& p : entries_) out.push_back(p.size());
  return out;
}

std::string PartitionVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += '|';
    out += entries_[i].to_string();
  }
  return out;
}

PartitionVector PartitionVector::parse(std::string_view text) {
  std::vector<Partition> entries;
  std::size_t pos = 0;
  while (true) {
    auto bar = text.find('|', pos);
    entries.push_back(Partition::parse(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return PartitionVector(std::move(entries));
}

namespace {
void require_same_components(const PartitionVector& a, const PartitionVector& b) {
  if (a.components() != b.components())
    throw SizeMismatch("partition vectors " + a.to_string() + " and " + b.to_string() + " have different lengths");
}
}  // namespace

std::int64_t z_order(const PartitionVector& mu) {
  std::int64_t z = 1;
  for (const auto& p : mu.entries()) z *= z_order(p);
  return z;
}

std::int64_t mn_character(const PartitionVector& a, const PartitionVector& mu) {
  require_same_components(a, mu);
  std::int64_t c = 1;
  for (int i = 0; i < a.components(); ++i) {
    c *= mn_character(a[static_cast<std::size_t>(i)], mu[static_cast<std::size_t>(i)]);
    if (c == 0) break;
  }
  return c;
}

PartitionVector conjugate(const PartitionVector& a) {
  std::vector<Partition> out;
  for (const auto& p : a.entries()) out.push_back(conjugate(p));
  return PartitionVector(std::move(out));
}

PartitionVector scale(const PartitionVector& mu, int d) {
  std::vector<Partition> out;
  for (const auto& p : mu.entries()) out.push_back(scale(p, d));
  return PartitionVector(std::move(out));
}

PartitionVector divide(const PartitionVector& mu, int d) {
  std::vector<Partition> out;
  for (const auto& p : mu.entries()) out.push_back(divide(p, d));
  return PartitionVector(std::move(out));
}

std::vector<int> divisors(const PartitionVector& mu) {
  int g = 0;
  for (const auto& p : mu.entries())
    for (int part : p.parts()) g = std::gcd(g, part);
  if (g == 0) return {1};
  std::vector<int> out;
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) out.push_back(d);
  return out;
}

PartitionVector merge(const PartitionVector& a, const PartitionVector& b) {
  require_same_components(a, b);
  std::vector<Partition> out;
  for (int i = 0; i < a.components(); ++i)
    out.push_back(merge(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
  return PartitionVector(std::move(out));
}

std::vector<PartitionVector> enumerate_block(const std::vector<int>& sizes) {
  std::vector<std::vector<Partition>> choices;
  for (int n : sizes) choices.push_back(enumerate_partitions(n));
  std::vector<PartitionVector> out;
  std::vector<Partition> current(sizes.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == sizes.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& p : choices[i]) {
      current[i] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> enumerate_size_tuples(int components, int max_degree) {
  if (components < 1) throw std::invalid_argument("need at least one component");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(components));
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == components) {
      if (budget < max_degree) out.push_back(current);
      return;
    }
    for (int n = 0; n <= budget; ++n) {
      current[static_cast<std::size_t>(i)] = n;
      self(self, i + 1, budget - n);
    }
  };
  rec(rec, 0, max_degree);
  return out;
}

std::vector<PartitionVector> enumerate_vectors(int components, int max_degree, bool include_empty) {
  std::vector<PartitionVector> out;
  if (include_empty) out.push_back(PartitionVector::empty(components));
  for (const auto& sizes : enumerate_size_tuples(components, max_degree)) {
    auto block = enumerate_block(sizes);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lmov
