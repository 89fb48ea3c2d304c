#pragma once

#include <cstddef>
#include <vector>

#include "qvcount/quiver.hpp"
#include "qvcount/rational.hpp"

namespace qvc {

/// nu = omega - sum v_i alpha_i, stored through the pair (w, v).
struct FramedWeight {
  IntVector w;
  IntVector v;
  friend bool operator==(const FramedWeight&, const FramedWeight&) = default;
};

using WeylWord = std::vector<std::size_t>;

/// Dot action s_k . v on dimension vectors. Throws UnsupportedError at a loop vertex.
IntVector reflect_dim(const Quiver& q, std::size_t k, const IntVector& v, const IntVector& w);
/// Applies the word right to left (the last letter acts first).
IntVector apply_word_dim(const Quiver& q, const WeylWord& word, const IntVector& v, const IntVector& w);

/// Pairing <nu, alpha_k^vee> = w_k - (v, e_k).
std::int64_t weight_pairing(const Quiver& q, std::size_t k, const IntVector& v, const IntVector& w);

/// Whether nu lies in the Weyl orbit of omega. Needs finite or affine type.
bool is_extremal(const Quiver& q, const IntVector& v, const IntVector& w);
/// Same decision without the type check (the caller has classified already).
bool is_extremal_unchecked(const Quiver& q, const IntVector& v, const IntVector& w);

RationalVector rho_vector(const Quiver& q, const IntVector& v, const IntVector& w);

/// Linear reflection on parameters: (s_i lambda)_j = lambda_j - c_ij lambda_i.
RationalVector reflect_linear(const Quiver& q, std::size_t i, const RationalVector& lambda);

/// Shifted action s_i . lambda = s_i lambda + rho(s_i . v) - s_i rho(v).
RationalVector reflect_param(const Quiver& q, std::size_t i, const RationalVector& lambda, const IntVector& v,
                             const IntVector& w);

/// Real root reflection s_i on the root lattice.
IntVector reflect_root(const Quiver& q, std::size_t i, const IntVector& beta);

/// Least-index descent of a positive real root to a simple root.
/// Each step records (vertex i, c) with beta = gamma + c e_i and gamma = s_i beta.
struct DescentStep {
  std::size_t vertex;
  std::int64_t c;
};
struct RootDescent {
  std::vector<DescentStep> steps;  // from beta downwards
  std::size_t simple = 0;          // the simple root reached
};
/// Throws UnsupportedError when beta is not a positive real root.
RootDescent canonical_descent(const Quiver& q, const IntVector& beta);

/// dim L_omega[nu] by Freudenthal's recursion. Finite or affine loop-free quivers only.
std::int64_t freudenthal_mult(const Quiver& q, const IntVector& w, const IntVector& v);

}  // namespace qvc
