#include "lmov/series.hpp"

#include <mutex>

namespace lmov {

const BlockCharacters& block_characters(const std::vector<int>& sizes) {
  static std::mutex mutex;
  static std::map<std::vector<int>, BlockCharacters> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(sizes);
  if (it != cache.end()) return it->second;

  BlockCharacters block;
  block.keys = enumerate_block(sizes);
  // Kronecker product of the component tables, first component outermost.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> chi(1, 1);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> z(1);
  chi(0, 0) = 1;
  z(0) = 1;
  for (int n : sizes) {
    const CharacterTable& t = character_table(n);
    const Eigen::Index a = chi.rows(), b = t.chi.rows();
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> next(a * b, a * b);
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> next_z(a * b);
    for (Eigen::Index i = 0; i < a; ++i) {
      next_z.segment(i * b, b) = z(i) * t.z;
      for (Eigen::Index j = 0; j < a; ++j) next.block(i * b, j * b, b, b) = chi(i, j) * t.chi;
    }
    chi = std::move(next);
    z = std::move(next_z);
  }
  block.chi = std::move(chi);
  block.z = std::move(z);
  return cache.emplace(sizes, std::move(block)).first->second;
}

PSeries<RatFunc> adams_qt(const PSeries<RatFunc>& p, int d) {
  const Substitution sub = Substitution::adams(d);
  PSeries<RatFunc> out(p.components(), p.max_degree(), p.constant().substitute(sub));
  if (p.truncated()) out.mark_truncated();
  for (const auto& [mu, c] : p.coefficients()) out.set(mu, c.substitute(sub));
  return out;
}

RatFunc qrho_weight(const PartitionVector& mu, QrhoDirection direction) {
  LaurentPoly product(1);
  for (const auto& part : mu.entries())
    for (int n : part.parts()) product *= qnum(n);
  if (direction == QrhoDirection::x_to_y) return RatFunc(product);
  return RatFunc(LaurentPoly(1), product);
}

PSeries<RatFunc> specialize_qrho(const PSeries<RatFunc>& p, QrhoDirection direction) {
  PSeries<RatFunc> out(p.components(), p.max_degree(), p.constant());
  if (p.truncated()) out.mark_truncated();
  for (const auto& [mu, c] : p.coefficients()) out.set(mu, c * qrho_weight(mu, direction));
  return out;
}

RatMatrix transform_matrix(const std::vector<int>& sizes, bool inverse) {
  const BlockCharacters& block = block_characters(sizes);
  const auto n = static_cast<Eigen::Index>(block.keys.size());
  RatMatrix x(n, n);
  RatVector w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    w(j) = qrho_weight(block.keys[static_cast<std::size_t>(j)],
                       inverse ? QrhoDirection::x_to_y : QrhoDirection::y_to_x) *
           ratio(1, block.z(j));
    for (Eigen::Index i = 0; i < n; ++i) x(i, j) = RatFunc(Rational(block.chi(i, j)));
  }
  RatMatrix t = x * w.asDiagonal() * x.transpose();
  return t;
}

SchurCoeffs<RatFunc> transform_T(const SchurCoeffs<RatFunc>& s, bool inverse) {
  SchurCoeffs<RatFunc> out(s.components(), s.max_degree());
  for (const auto& sizes : enumerate_size_tuples(s.components(), s.max_degree())) {
    const BlockCharacters& block = block_characters(sizes);
    const auto n = static_cast<Eigen::Index>(block.keys.size());
    RatVector c(n);
    bool any = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      c(i) = s.coefficient(block.keys[static_cast<std::size_t>(i)]);
      any = any || !c(i).is_zero();
    }
    if (!any) continue;
    RatVector image = transform_matrix(sizes, inverse) * c;
    for (Eigen::Index i = 0; i < n; ++i) out.set(block.keys[static_cast<std::size_t>(i)], image(i));
  }
  return out;
}

}  // namespace lmov
