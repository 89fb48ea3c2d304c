#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "qvcount/linalg.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/weights.hpp"

namespace qvc {

enum class Direction { raise, lower };

/// A weight-graded module given on a box window 0 <= u <= window() of v-coordinates,
/// with the Chevalley generators as sparse matrices between weight spaces.
class WeightModel {
 public:
  virtual ~WeightModel() = default;

  virtual const Quiver& quiver() const = 0;
  virtual const IntVector& framing() const = 0;
  virtual const IntVector& window() const = 0;
  /// Weights of the window whose space is nonzero, in lexicographic order.
  virtual const std::vector<IntVector>& weights() const = 0;
  virtual std::size_t dim_at(const IntVector& u) const = 0;
  /// raise: e_i from V_u to V_{u - e_i}; lower: f_i from V_u to V_{u + e_i}.
  /// Shape is dim(target) x dim(source); zero-dimensional ends are allowed.
  virtual SparseMatrix chevalley(std::size_t i, Direction d, const IntVector& u) const = 0;

  bool in_window(const IntVector& u) const { return is_nonnegative(u) && leq(u, window()); }
};

/// Root vectors built as nested commutators along the canonical descent of a real root.
/// e_beta = (ad e_i)^c e_gamma for the first descent step beta = gamma + c e_i; f_beta likewise.
class RootVectorCache {
 public:
  explicit RootVectorCache(const WeightModel& model) : model_(model) {}

  /// Operator of the root vector at source weight u; raise moves to u - beta, lower to u + beta.
  const SparseMatrix& at(const IntVector& beta, Direction d, const IntVector& u);

 private:
  SparseMatrix power(std::size_t i, Direction d, std::int64_t k, const IntVector& u);
  IntVector shift(const IntVector& u, const IntVector& beta, Direction d, std::int64_t k = 1) const;

  const WeightModel& model_;
  std::map<IntVector, RootDescent> descents_;
  std::map<std::tuple<IntVector, int, IntVector>, SparseMatrix> cache_;
};

SparseMatrix root_vector_operator(const WeightModel& model, const IntVector& beta, Direction d, const IntVector& u);

}  // namespace qvc
