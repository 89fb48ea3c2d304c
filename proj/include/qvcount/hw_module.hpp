#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qvcount/linalg.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/weight_model.hpp"

namespace qvc {

/// Irreducible highest weight module L_omega of a finite-type quiver, built level by level.
///
/// A basis vector at weight v is a lowering monomial f_{i_k} ... f_{i_1} v_+, stored as the
/// sequence (i_1, ..., i_k) in order of application. Candidates at v are f_i b for basis
/// vectors b one level up; a candidate set is independent iff its e-images are, since the
/// module is irreducible. Candidates are tried in lexicographic order of their sequences.
class HWModule : public WeightModel {
 public:
  const Quiver& quiver() const override { return q_; }
  const IntVector& framing() const override { return w_; }
  const IntVector& window() const override { return window_; }
  const std::vector<IntVector>& weights() const override { return weights_; }
  std::size_t dim_at(const IntVector& u) const override;
  SparseMatrix chevalley(std::size_t i, Direction d, const IntVector& u) const override;

  std::size_t total_dim() const { return total_; }
  /// Basis monomials at u (empty if u is not a weight).
  std::vector<std::vector<std::size_t>> monomials(const IntVector& u) const;
  /// Contravariant form on the basis at u, normalised by <v_+, v_+> = 1.
  Matrix gram(const IntVector& u) const;
  /// True when a depth bound stopped the construction early.
  bool truncated() const { return truncated_; }

  friend HWModule build_hw_module(const Quiver& q, const IntVector& w, std::optional<std::int64_t> depth,
                                  std::size_t max_dim);

 private:
  struct Space {
    std::vector<std::vector<std::size_t>> monomials;
    Matrix gram;
  };

  Quiver q_;
  IntVector w_;
  IntVector window_;
  std::vector<IntVector> weights_;
  std::map<IntVector, Space> spaces_;
  // keyed by (source weight, vertex)
  std::map<std::pair<IntVector, std::size_t>, SparseMatrix> e_ops_;
  std::map<std::pair<IntVector, std::size_t>, SparseMatrix> f_ops_;
  std::size_t total_ = 0;
  bool truncated_ = false;
};

/// Throws UnsupportedError unless q is of finite type without loops, ResourceError past max_dim.
HWModule build_hw_module(const Quiver& q, const IntVector& w, std::optional<std::int64_t> depth,
                         std::size_t max_dim);
HWModule build_hw_module(const Quiver& q, const IntVector& w, std::optional<std::int64_t> depth = std::nullopt);

std::size_t weight_space_dim(const WeightModel& m, const IntVector& v);

}  // namespace qvc
