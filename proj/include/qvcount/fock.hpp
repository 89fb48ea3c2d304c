#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qvcount/linalg.hpp"
#include "qvcount/partitions.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/weight_model.hpp"

namespace qvc {

using Multipartition = std::vector<Partition>;

std::string to_string(const Multipartition& mu);
int size(const Multipartition& mu);

/// Residue of the box in row a, column b (0-indexed) of a component with the given charge.
std::size_t residue(int row, int col, std::int64_t charge, std::size_t level);

/// Addable or removable nodes of one residue, across all components.
struct Node {
  std::size_t component;
  int row;
  int col;
  bool addable;
};
std::vector<Node> nodes_of_residue(const Multipartition& mu, std::size_t i, const IntVector& charges, std::size_t level);

enum class CrystalKind { e, f };

/// Kashiwara operator on the charged level-r Fock crystal. Nodes are read component by
/// component in increasing index and, inside a component, by decreasing content; an
/// addable node followed by a removable one cancels. f acts on the leftmost surviving
/// addable node, e on the rightmost surviving removable node.
std::optional<Multipartition> crystal_op(const Multipartition& mu, std::size_t i, CrystalKind kind,
                                         const IntVector& charges, std::size_t level);

/// Truncated Fock space F^{(x) r} with r = charges.size(): every multipartition with at most cap boxes.
class FockSpace {
 public:
  FockSpace(std::size_t level, IntVector charges, int cap);

  std::size_t level() const { return level_; }
  const IntVector& charges() const { return charges_; }
  int cap() const { return cap_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Multipartition>& basis() const { return basis_; }
  std::optional<std::size_t> index(const Multipartition& mu) const;
  /// Indices of the basis vectors with exactly d boxes.
  std::vector<std::size_t> degree(int d) const;

  enum class Kind { e, f };
  /// f_i adds an i-node, e_i removes one, each with coefficient 1. Needs level >= 2.
  SparseMatrix chevalley_matrix(std::size_t i, Kind kind) const;
  /// Diagonal h_i: addable minus removable i-nodes.
  SparseMatrix cartan_matrix(std::size_t i) const;
  /// k < 0: b_k adds border strips of size |k| with sign (-1)^(rows - 1), summed over
  /// components; k > 0: the transpose. Boxes past the cap are dropped.
  SparseMatrix heisenberg_matrix(int k) const;

 private:
  std::size_t level_;
  IntVector charges_;
  int cap_;
  std::vector<Multipartition> basis_;
  std::map<Multipartition, std::size_t> index_;
};

/// All multipartitions with r components and n boxes in total.
std::vector<Multipartition> multipartitions_of(int n, std::size_t r);

/// Border strips of size k added to p, with their signs.
std::vector<std::pair<Partition, int>> add_border_strips(const Partition& p, int k);

struct FiltrationReport {
  int degree = 0;
  int m = 0;
  int r = 1;
  std::vector<std::size_t> dims;  // dim F_j for j = 0, 1, ... up to the first zero
};

/// Nested spans F_j in degree n of F^{(x) r} (level 1) under the diagonal Heisenberg:
/// F_j is spanned by the images of b_{-m j_1} ... b_{-m j_k} with (rm - 1)(j_1 + ... + j_k) >= j.
FiltrationReport heis_filtration_dims(int m, int r, int n, std::size_t max_dim);
FiltrationReport heis_filtration_dims(int m, int r, int n);

/// w.v - (v,v)/2 - s (wbar m - 1) with wbar the sum of w.
std::int64_t o_support_bound(const Quiver& q, const IntVector& v, const IntVector& w, std::int64_t m, std::int64_t s);

/// L_omega for a cyclic quiver of length >= 2, realised inside the Fock space with
/// w_k components of charge k as the span of lowering monomials on the vacuum,
/// restricted to the window 0 <= u <= window.
class FockWeightModel : public WeightModel {
 public:
  FockWeightModel(const Quiver& q, const IntVector& w, const IntVector& window, std::size_t max_dim);

  const Quiver& quiver() const override { return q_; }
  const IntVector& framing() const override { return w_; }
  const IntVector& window() const override { return window_; }
  const std::vector<IntVector>& weights() const override { return weights_; }
  std::size_t dim_at(const IntVector& u) const override;
  SparseMatrix chevalley(std::size_t i, Direction d, const IntVector& u) const override;

  /// Dimension of the full Fock weight space (all multipartitions of that content).
  std::size_t fock_dim_at(const IntVector& u) const;
  const IntVector& charges() const { return charges_; }

 private:
  struct Level {
    std::vector<Multipartition> basis;
    std::map<Multipartition, std::size_t> index;
    Subspace span;
  };

  Quiver q_;
  IntVector w_;
  IntVector window_;
  IntVector charges_;
  std::vector<IntVector> weights_;
  std::map<IntVector, Level> levels_;
  std::map<std::pair<IntVector, std::size_t>, SparseMatrix> lower_;
  std::map<std::pair<IntVector, std::size_t>, SparseMatrix> raise_;
};

/// Number of vertices if q is the cyclic quiver (arrows i -> i+1 mod l), otherwise nullopt.
std::optional<std::size_t> cyclic_length(const Quiver& q);

}  // namespace qvc
