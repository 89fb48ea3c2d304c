#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qvcount/rational.hpp"

namespace qvc {

using Arrow = std::pair<std::size_t, std::size_t>;  // (tail, head)

class Quiver {
 public:
  Quiver() = default;
  /// Throws DomainError on an empty vertex set or an out-of-range arrow.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows, std::string name = "");

  std::size_t size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& name() const { return name_; }

  std::size_t loops(std::size_t i) const { return loops_[i]; }
  bool has_loops() const;
  /// Number of arrows between distinct i and j, either direction.
  std::size_t edges(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }
  /// Cartan entry (e_i, e_j) of the symmetrized Tits form.
  std::int64_t cartan(std::size_t i, std::size_t j) const;

  bool is_connected() const;
  /// Same underlying graph with every arrow reversed.
  Quiver reversed() const;

  void check_length(const IntVector& x, const char* what) const;
  void check_length(const RationalVector& x, const char* what) const;

 private:
  std::size_t n_ = 0;
  std::vector<Arrow> arrows_;
  std::string name_;
  std::vector<std::size_t> loops_;
  std::vector<std::size_t> adj_;
};

/// a1 (alias vertex), a2, a3, d4, jordan, cyclic:L. Throws ParseError for unknown names.
Quiver builtin_quiver(std::string_view name);
/// Either a builtin name or a path to a quiver description file.
Quiver load_quiver(std::string_view name_or_path);
/// Parses "vertices: n / arrows: [[t,h],...]" text, or the same keys as a JSON object.
Quiver parse_quiver_text(std::string_view text);
std::string quiver_to_text(const Quiver& q);

std::int64_t tits_form(const Quiver& q, const IntVector& x, const IntVector& y);
std::int64_t p_value(const Quiver& q, const IntVector& v);

enum class QuiverType { finite, affine, indefinite };
std::string to_string(QuiverType t);

struct QuiverClass {
  QuiverType type = QuiverType::indefinite;
  std::optional<IntVector> delta;  // affine only
};

/// Throws UnsupportedError for disconnected quivers.
QuiverClass classify_quiver(const Quiver& q);

enum class RootKind { none, real, imaginary };

struct Root {
  IntVector vec;
  RootKind kind = RootKind::real;
  bool is_real() const { return kind == RootKind::real; }
  friend bool operator==(const Root&, const Root&) = default;
};

/// Reflection-descent root test for a nonnegative nonzero vector.
RootKind root_kind(const Quiver& q, const IntVector& alpha);

/// Positive roots with 0 < alpha <= bound, ordered by height and then lexicographically.
std::vector<Root> roots_bounded(const Quiver& q, const IntVector& bound);

/// Every vector x with 0 <= x <= bound in lexicographic order (includes 0 and bound).
std::vector<IntVector> box_vectors(const IntVector& bound);

bool leq(const IntVector& a, const IntVector& b);
bool is_nonnegative(const IntVector& a);
std::int64_t height(const IntVector& a);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(std::int64_t k, const IntVector& a);
IntVector unit(std::size_t n, std::size_t i);

struct Decomposition {
  IntVector v0;
  std::vector<IntVector> roots;  // v^1, ..., v^k
};

struct FlatResult {
  bool flat = true;
  std::optional<Decomposition> witness;  // a violating decomposition when !flat
  std::int64_t margin = 0;               // minimum of the left hand side over decompositions
};

/// Left hand side of the flatness inequality for one decomposition.
std::int64_t flatness_margin(const Quiver& q, const IntVector& v, const IntVector& w, const Decomposition& d);

/// Throws ResourceError when the sum of v exceeds max_total.
FlatResult cb_flat(const Quiver& q, const IntVector& v, const IntVector& w, long max_total);
FlatResult cb_flat(const Quiver& q, const IntVector& v, const IntVector& w);

struct GenericResult {
  bool generic = true;
  std::optional<Root> witness;
};

GenericResult is_generic(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda,
                         const RationalVector& theta);

}  // namespace qvc
