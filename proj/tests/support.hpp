#pragma once

// Small helpers shared by the test programs.

#include <cstdint>
#include <utility>
#include <vector>

#include "qvcount/linalg.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/weight_model.hpp"

namespace qvc::testing {

inline IntVector iv(std::initializer_list<std::int64_t> xs) { return IntVector(xs); }

struct Op {
  std::size_t vertex;
  Direction dir;
};

inline IntVector step(const IntVector& u, const Op& op) {
  IntVector out = u;
  out[op.vertex] += op.dir == Direction::lower ? 1 : -1;
  return out;
}

inline std::size_t safe_dim(const WeightModel& m, const IntVector& u) {
  return m.in_window(u) ? m.dim_at(u) : 0;
}

/// Product of Chevalley operators, the first element acting first, starting at weight u.
/// Steps through weights outside the window give the zero map.
inline SparseMatrix word(const WeightModel& m, const std::vector<Op>& ops, const IntVector& u) {
  IntVector cur = u;
  SparseMatrix acc = SparseMatrix::identity(safe_dim(m, u));
  for (const auto& op : ops) {
    IntVector next = step(cur, op);
    SparseMatrix piece(safe_dim(m, next), safe_dim(m, cur));
    if (m.in_window(cur) && m.in_window(next)) piece = m.chevalley(op.vertex, op.dir, cur);
    acc = piece * acc;
    cur = next;
  }
  return acc;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// sum_k (-1)^k C(n,k) x_i^{n-k} x_j x_i^k with x = e or f, acting at u; n = 1 - a_ij.
inline SparseMatrix serre(const WeightModel& m, std::size_t i, std::size_t j, Direction d, const IntVector& u) {
  const std::int64_t n = 1 - m.quiver().cartan(i, j);
  SparseMatrix total;
  bool first = true;
  for (std::int64_t k = 0; k <= n; ++k) {
    std::vector<Op> ops(static_cast<std::size_t>(k), Op{i, d});
    ops.push_back({j, d});
    for (std::int64_t t = 0; t < n - k; ++t) ops.push_back({i, d});
    SparseMatrix term = Rational(static_cast<long>((k % 2 ? -1 : 1) * binom(n, k))) * word(m, ops, u);
    total = first ? term : total + term;
    first = false;
  }
  return total;
}

/// [e_i, f_j] - delta_ij h_i at u, with h_i acting by w_i - (v, e_i).
inline SparseMatrix commutator_defect(const WeightModel& m, std::size_t i, std::size_t j, const IntVector& u) {
  SparseMatrix ef = word(m, {{j, Direction::lower}, {i, Direction::raise}}, u);
  SparseMatrix fe = word(m, {{i, Direction::raise}, {j, Direction::lower}}, u);
  SparseMatrix out = ef - fe;
  if (i == j) {
    const std::int64_t h = m.framing()[i] - tits_form(m.quiver(), u, unit(u.size(), i));
    out = out - Rational(static_cast<long>(h)) * SparseMatrix::identity(m.dim_at(u));
  }
  return out;
}

}  // namespace qvc::testing
