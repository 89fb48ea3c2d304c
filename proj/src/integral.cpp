#include "qvcount/integral.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "qvcount/errors.hpp"
#include "qvcount/fock.hpp"
#include "qvcount/hw_module.hpp"
#include "qvcount/weights.hpp"

namespace qvc {

IntegralRootData integral_roots(const Quiver& q, const RationalVector& lambda, const IntVector& bound) {
  q.check_length(lambda, "lambda");
  IntegralRootData data;
  for (const auto& r : roots_bounded(q, bound))
    if (r.is_real() && is_integer(dot(lambda, r.vec))) data.positive_roots.push_back(r.vec);
  std::sort(data.positive_roots.begin(), data.positive_roots.end());
  std::set<IntVector> all(data.positive_roots.begin(), data.positive_roots.end());
  for (const auto& b : data.positive_roots) {
    bool decomposable = false;
    for (const auto& a : data.positive_roots) {
      IntVector rest = sub(b, a);
      if (is_nonnegative(rest) && height(rest) > 0 && all.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) data.simple_system.push_back(b);
  }
  return data;
}

std::size_t a_submodule_dim(const WeightModel& model, const IntVector& v_target, const std::vector<IntVector>& roots,
                            std::uint64_t seed) {
  const auto& q = model.quiver();
  q.check_length(v_target, "v");
  if (!model.in_window(v_target) || model.dim_at(v_target) == 0) return 0;

  std::map<IntVector, Subspace> span;
  for (const auto& u : model.weights()) span.emplace(u, Subspace(model.dim_at(u)));

  std::deque<std::pair<IntVector, RationalVector>> pending;
  for (const auto& u : model.weights()) {
    if (!is_extremal_unchecked(q, u, model.framing())) continue;
    for (std::size_t k = 0; k < model.dim_at(u); ++k) {
      RationalVector x(model.dim_at(u));
      x[k] = 1;
      if (span.at(u).add(x)) pending.emplace_back(u, std::move(x));
    }
  }

  RootVectorCache cache(model);
  std::mt19937_64 rng(seed);
  while (!pending.empty()) {
    std::size_t pick = 0;
    if (seed != 0) pick = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng);
    auto [u, x] = std::move(pending[pick]);
    pending.erase(pending.begin() + static_cast<long>(pick));
    for (const auto& beta : roots) {
      for (auto d : {Direction::raise, Direction::lower}) {
        IntVector t = d == Direction::raise ? sub(u, beta) : add(u, beta);
        if (!model.in_window(t) || model.dim_at(t) == 0) continue;
        auto y = cache.at(beta, d, u).apply(x);
        if (is_zero(y)) continue;
        if (span.at(t).add(y)) pending.emplace_back(t, std::move(y));
      }
    }
  }
  return span.at(v_target).dim();
}

std::size_t a_submodule_dim(const WeightModel& model, const IntVector& v_target, const IntegralRootData& data) {
  return a_submodule_dim(model, v_target, data.positive_roots);
}

std::string to_string(CountStatus s) {
  switch (s) {
    case CountStatus::proven_finite_type:
      return "proven-finite-type";
    case CountStatus::proven_etingof_case:
      return "proven-etingof-case";
    case CountStatus::conjectural:
      return "conjectural";
    case CountStatus::known_answer:
      return "known-answer";
    case CountStatus::not_computable:
      return "not-computable";
  }
  return "not-computable";
}

namespace {

CountResult known(std::int64_t c, std::string branch) {
  CountResult r;
  r.count = c;
  r.status = CountStatus::known_answer;
  r.branch = std::move(branch);
  return r;
}

CountResult not_computable(std::string branch, std::string reason) {
  CountResult r;
  r.status = CountStatus::not_computable;
  r.branch = std::move(branch);
  r.reason = std::move(reason);
  return r;
}

bool is_jordan(const Quiver& q) { return q.size() == 1 && q.loops(0) == 1 && q.arrows().size() == 1; }

std::size_t fock_count(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda,
                       std::int64_t slack, const Limits& limits) {
  IntVector window = v;
  for (auto& x : window) x += slack;
  FockWeightModel model(q, w, window, limits.max_module_dim);
  auto data = integral_roots(q, lambda, window);
  return a_submodule_dim(model, v, data);
}

}  // namespace

CountResult predicted_count(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda,
                            const Limits& limits) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  q.check_length(lambda, "lambda");
  if (!is_nonnegative(v) || !is_nonnegative(w)) throw DomainError("v and w must be nonnegative");

  if (is_jordan(q) && w[0] == 1) {
    const auto n = v[0];
    if (n == 0) return known(1, "jordan");
    const Rational& kappa = lambda[0];
    if (!is_integer(kappa)) return known(kappa.get_den() == n ? 1 : 0, "jordan");
    return known(is_extremal_unchecked(q, v, w) ? 1 : 0, "jordan");
  }
  if (q.has_loops()) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q.loops(i) > 0 && v[i] > 0) return known(0, "loop-vertex");
    if (height(v) == 0) return known(1, "highest-weight");
    return not_computable("loop-quiver", "quiver has loops at vertices with v_i = 0; no model implemented");
  }

  QuiverClass cls;
  try {
    cls = classify_quiver(q);
  } catch (const UnsupportedError& e) {
    return not_computable("unclassified", e.what());
  }

  if (cls.type == QuiverType::finite) {
    auto model = build_hw_module(q, w, std::nullopt, limits.max_module_dim);
    auto data = integral_roots(q, lambda, model.window());
    CountResult r;
    r.count = static_cast<std::int64_t>(a_submodule_dim(model, v, data));
    r.status = CountStatus::proven_finite_type;
    r.branch = "finite-type";
    return r;
  }

  if (auto l = cyclic_length(q); l && *l >= 2) {
    CountResult r;
    r.branch = "cyclic-fock";
    // v = n delta with a unit framing vector: the case settled in the literature.
    bool unit_w = height(w) == 1;
    bool multiple_of_delta = std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x == v[0]; });
    r.status = unit_w && multiple_of_delta ? CountStatus::proven_etingof_case : CountStatus::conjectural;
    std::int64_t s = limits.slack;
    auto current = fock_count(q, v, w, lambda, s, limits);
    for (; s <= limits.max_slack; ++s) {
      auto next = fock_count(q, v, w, lambda, s + 1, limits);
      if (next == current) {
        r.count = static_cast<std::int64_t>(current);
        r.slack = s;
        return r;
      }
      current = next;
    }
    throw ResourceError("closure did not stabilise up to slack " + std::to_string(limits.max_slack) +
                        "; raise QVCOUNT_MAX_SLACK");
  }

  return not_computable(cls.type == QuiverType::affine ? "affine" : "indefinite",
                        "no explicit model of L_omega for this quiver type");
}

CountResult predicted_count(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda) {
  return predicted_count(q, v, w, lambda, Limits::from_env());
}

GrassmannianResult grassmannian_singular_count(std::int64_t v, std::int64_t w, const Rational& lambda) {
  if (w < 2) throw DomainError("no singular integral parameters when w < 2");
  if (!is_integer(lambda) || lambda < 1 - w || lambda > -1) {
    throw DomainError("lambda = " + to_string(lambda) + " is outside the singular window " + std::to_string(1 - w) +
                      "..-1; use predicted_count for other parameters");
  }
  if (v < 0 || v > w) throw DomainError("need 0 <= v <= w");
  const std::int64_t lam = lambda.get_num().get_si();
  GrassmannianResult res;
  res.exponent = v + 1 - std::min({v, -lam, w + lam});

  Quiver a1(1, {}, "a1");
  auto model = build_hw_module(a1, {w});
  const auto dim = static_cast<std::int64_t>(model.dim_at({v}));
  std::int64_t image = 0;
  if (v - res.exponent >= 0) {
    SparseMatrix f = SparseMatrix::identity(model.dim_at({v - res.exponent}));
    for (std::int64_t u = v - res.exponent; u < v; ++u) f = model.chevalley(0, Direction::lower, {u}) * f;
    image = static_cast<std::int64_t>(rank(f.to_dense()));
  }
  res.count = dim - image;
  return res;
}

}  // namespace qvc
