#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvcount/config.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/weight_model.hpp"

namespace qvc {

struct IntegralRootData {
  std::vector<IntVector> positive_roots;  // real roots beta <= bound with lambda . beta integral
  std::vector<IntVector> simple_system;   // those that are not a sum of two others
};

IntegralRootData integral_roots(const Quiver& q, const RationalVector& lambda, const IntVector& bound);

/// Dimension at v_target of the span of all extremal weight vectors of the model under the
/// raising and lowering root vectors of the given positive real roots, closed inside the window.
/// A nonzero seed shuffles the order in which pending vectors are processed.
std::size_t a_submodule_dim(const WeightModel& model, const IntVector& v_target, const std::vector<IntVector>& roots,
                            std::uint64_t seed = 0);
std::size_t a_submodule_dim(const WeightModel& model, const IntVector& v_target, const IntegralRootData& data);

enum class CountStatus { proven_finite_type, proven_etingof_case, conjectural, known_answer, not_computable };
std::string to_string(CountStatus s);

struct CountResult {
  std::optional<std::int64_t> count;  // empty when not computable
  CountStatus status = CountStatus::not_computable;
  std::string branch;
  std::string reason;                  // why not computable, if so
  std::optional<std::int64_t> slack;   // certified window slack on the Fock branch
};

CountResult predicted_count(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda,
                            const Limits& limits);
CountResult predicted_count(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda);

struct GrassmannianResult {
  std::int64_t exponent = 0;  // i = v + 1 - min(v, -lambda, w + lambda)
  std::int64_t count = 0;
};

/// Single vertex, integral lambda with 1 - w <= lambda <= -1, 0 <= v <= w: dim L[nu] minus the
/// dimension of the image of f^i in L[nu]. Throws DomainError outside that window.
GrassmannianResult grassmannian_singular_count(std::int64_t v, std::int64_t w, const Rational& lambda);

}  // namespace qvc
