#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvcount/quiver.hpp"
#include "qvcount/rational.hpp"

namespace qvc {

enum class Space { theta, lambda };
std::string to_string(Space s);

/// normal . x = offset, with a primitive integer normal whose first nonzero entry is positive.
struct Hyperplane {
  IntVector normal;
  Rational offset;
  Space space = Space::theta;
  std::string provenance;  // classical | quantum | singular-conjecture | translation
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal == b.normal && a.offset == b.offset && a.space == b.space && a.provenance == b.provenance;
  }
};

/// Rescales normal . x = offset to the canonical primitive form.
Hyperplane make_hyperplane(IntVector normal, Rational offset, Space space, std::string provenance);
bool hyperplane_less(const Hyperplane& a, const Hyperplane& b);

std::vector<Hyperplane> classical_walls(const Quiver& q, const IntVector& v, const IntVector& w);
std::vector<Root> quantum_walls(const Quiver& q, const IntVector& v, const RationalVector& lambda);

/// Chambers of a central arrangement in theta space, as sign vectors (+1 / -1 per wall).
/// Only rank <= 4 is supported.
std::vector<std::vector<int>> chambers(const std::vector<Hyperplane>& walls, std::size_t rank);

struct Summand {
  IntVector root;
  std::int64_t mult = 1;
};

struct SliceData {
  Quiver hat_quiver;
  IntVector hat_v;
  IntVector hat_w;
  std::vector<IntVector> linear;  // row i is v^i: (r lambda)_i = lambda . v^i
  RationalVector offset;          // r-hat(lambda) = r(lambda) + offset
  RationalVector restrict(const RationalVector& lambda) const;
};

/// Slice at a decomposition v = v0 + sum n_i v^i. Throws DomainError naming the failed condition.
SliceData slice_data(const Quiver& q, const IntVector& v, const IntVector& w, const IntVector& v0,
                     const std::vector<Summand>& summands);

struct UnknownOracle {
  IntVector root;
  std::int64_t k = 0;
  std::int64_t loops = 0;
  std::int64_t hat_v = 0;
  std::int64_t hat_w = 0;
};

struct SingularReport {
  std::vector<Hyperplane> planes;
  std::vector<UnknownOracle> unknown;  // hat problems with two or more loops
};

/// Needs finite or affine type.
SingularReport singular_hyperplanes(const Quiver& q, const IntVector& v, const IntVector& w);

/// Parameter hyperplanes parallel to ker alpha along which translation by chi can fail.
/// alpha real: the real-root clause. alpha = delta of a cyclic quiver with v = n delta and a
/// unit framing: the affine clause.
std::vector<Hyperplane> translation_bad_hyperplanes(const Quiver& q, const IntVector& v, const IntVector& w,
                                                    const IntVector& alpha, const IntVector& chi);

struct PerverseProfile {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> d;            // d_i for i = 0..q+1
  std::vector<std::int64_t> filtration;   // index for i = 0..d_0
  std::int64_t filtration_index(std::int64_t i) const;
};

PerverseProfile perverse_profile(std::int64_t n, std::int64_t m);

}  // namespace qvc
