#include "qvcount/weights.hpp"

#include <map>

#include "qvcount/errors.hpp"

namespace qvc {

namespace {

void require_loop_free(const Quiver& q, std::size_t k, const char* what) {
  if (k >= q.size()) throw DomainError(std::string(what) + ": vertex " + std::to_string(k) + " out of range");
  if (q.loops(k) != 0) {
    throw UnsupportedError(std::string(what) + ": vertex " + std::to_string(k) +
                           " carries a loop, simple reflection undefined");
  }
}

std::int64_t neighbour_sum(const Quiver& q, std::size_t k, const IntVector& v) {
  std::int64_t s = 0;
  for (const auto& [t, h] : q.arrows()) {
    if (t == h) continue;
    if (t == k) s += v[h];
    if (h == k) s += v[t];
  }
  return s;
}

}  // namespace

IntVector reflect_dim(const Quiver& q, std::size_t k, const IntVector& v, const IntVector& w) {
  require_loop_free(q, k, "reflect_dim");
  q.check_length(v, "v");
  q.check_length(w, "w");
  IntVector out = v;
  out[k] = w[k] + neighbour_sum(q, k, v) - v[k];
  return out;
}

IntVector apply_word_dim(const Quiver& q, const WeylWord& word, const IntVector& v, const IntVector& w) {
  IntVector x = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect_dim(q, *it, x, w);
  return x;
}

std::int64_t weight_pairing(const Quiver& q, std::size_t k, const IntVector& v, const IntVector& w) {
  return w[k] - tits_form(q, v, unit(q.size(), k));
}

bool is_extremal_unchecked(const Quiver& q, const IntVector& v, const IntVector& w) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  IntVector x = v;
  while (true) {
    if (!is_nonnegative(x)) return false;
    bool moved = false;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q.loops(k) != 0 || weight_pairing(q, k, x, w) >= 0) continue;
      x = reflect_dim(q, k, x, w);
      moved = true;
      break;
    }
    if (!moved) return height(x) == 0 && is_nonnegative(x);
  }
}

bool is_extremal(const Quiver& q, const IntVector& v, const IntVector& w) {
  if (classify_quiver(q).type == QuiverType::indefinite) {
    throw UnsupportedError("is_extremal: indefinite quiver, dominant descent may not terminate meaningfully");
  }
  return is_extremal_unchecked(q, v, w);
}

RationalVector rho_vector(const Quiver& q, const IntVector& v, const IntVector& w) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  RationalVector rho(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    std::int64_t in = 0;
    std::int64_t out = 0;
    for (const auto& [t, h] : q.arrows()) {
      if (h == k) in += v[t];
      if (t == k) out += v[h];
    }
    rho[k] = Rational(-(in - out - w[k]), 2);
    rho[k].canonicalize();
  }
  return rho;
}

RationalVector reflect_linear(const Quiver& q, std::size_t i, const RationalVector& lambda) {
  q.check_length(lambda, "lambda");
  RationalVector out = lambda;
  for (std::size_t j = 0; j < q.size(); ++j) out[j] -= lambda[i] * static_cast<long>(q.cartan(i, j));
  return out;
}

RationalVector reflect_param(const Quiver& q, std::size_t i, const RationalVector& lambda, const IntVector& v,
                             const IntVector& w) {
  require_loop_free(q, i, "reflect_param");
  auto s_lambda = reflect_linear(q, i, lambda);
  auto rho_new = rho_vector(q, reflect_dim(q, i, v, w), w);
  auto s_rho = reflect_linear(q, i, rho_vector(q, v, w));
  for (std::size_t j = 0; j < q.size(); ++j) s_lambda[j] += rho_new[j] - s_rho[j];
  return s_lambda;
}

IntVector reflect_root(const Quiver& q, std::size_t i, const IntVector& beta) {
  require_loop_free(q, i, "reflect_root");
  IntVector out = beta;
  out[i] -= tits_form(q, beta, unit(q.size(), i));
  return out;
}

RootDescent canonical_descent(const Quiver& q, const IntVector& beta) {
  q.check_length(beta, "beta");
  if (root_kind(q, beta) != RootKind::real) throw UnsupportedError("not a positive real root: (" + join(beta) + ")");
  RootDescent d;
  IntVector x = beta;
  while (height(x) > 1) {
    bool moved = false;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q.loops(i) != 0) continue;
      auto c = tits_form(q, x, unit(q.size(), i));
      if (c > 0) {
        d.steps.push_back({i, c});
        x[i] -= c;
        moved = true;
        break;
      }
    }
    if (!moved) throw UnsupportedError("real-root descent stalled at (" + join(x) + ")");
  }
  for (std::size_t i = 0; i < q.size(); ++i)
    if (x[i] == 1) d.simple = i;
  return d;
}

std::int64_t freudenthal_mult(const Quiver& q, const IntVector& w, const IntVector& v) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  if (q.has_loops()) throw UnsupportedError("freudenthal_mult: quiver has loops");
  auto cls = classify_quiver(q);
  if (cls.type == QuiverType::indefinite) throw UnsupportedError("freudenthal_mult: indefinite type");
  if (!is_nonnegative(v)) return 0;

  const auto imaginary_mult = static_cast<std::int64_t>(q.size()) - 1;
  auto roots = roots_bounded(q, v);
  auto box = box_vectors(v);
  std::map<IntVector, std::int64_t> mult;
  for (const auto& u : box) {
    if (height(u) == 0) {
      mult[u] = 1;
      continue;
    }
    std::int64_t denom = -tits_form(q, u, u);
    for (std::size_t i = 0; i < q.size(); ++i) denom += 2 * u[i] * (w[i] + 1);
    if (denom == 0) {
      mult[u] = 0;
      continue;
    }
    std::int64_t num = 0;
    for (const auto& r : roots) {
      if (!leq(r.vec, u)) continue;
      std::int64_t m_alpha = r.is_real() ? 1 : imaginary_mult;
      std::int64_t inner = 0;
      IntVector x = sub(u, r.vec);
      while (is_nonnegative(x)) {
        auto mx = mult.at(x);
        if (mx != 0) inner += mx * (dot(w, r.vec) - tits_form(q, x, r.vec));
        x = sub(x, r.vec);
      }
      num += m_alpha * inner;
    }
    num *= 2;
    if (num % denom != 0) {
      throw std::logic_error("freudenthal_mult: non-integral multiplicity at (" + join(u) + ")");
    }
    mult[u] = num / denom;
  }
  return mult.at(v);
}

}  // namespace qvc
