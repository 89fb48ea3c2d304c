#include "qvcount/weight_model.hpp"

#include "qvcount/errors.hpp"

namespace qvc {

namespace {

Rational binomial(std::int64_t n, std::int64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

IntVector RootVectorCache::shift(const IntVector& u, const IntVector& beta, Direction d, std::int64_t k) const {
  return d == Direction::raise ? sub(u, scale(k, beta)) : add(u, scale(k, beta));
}

SparseMatrix RootVectorCache::power(std::size_t i, Direction d, std::int64_t k, const IntVector& u) {
  const auto& q = model_.quiver();
  SparseMatrix out = SparseMatrix::identity(model_.dim_at(u));
  IntVector cur = u;
  auto ei = unit(q.size(), i);
  for (std::int64_t s = 0; s < k; ++s) {
    out = model_.chevalley(i, d, cur) * out;
    cur = shift(cur, ei, d);
  }
  return out;
}

const SparseMatrix& RootVectorCache::at(const IntVector& beta, Direction d, const IntVector& u) {
  auto key = std::make_tuple(beta, static_cast<int>(d), u);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const auto& q = model_.quiver();
  auto dit = descents_.find(beta);
  if (dit == descents_.end()) dit = descents_.emplace(beta, canonical_descent(q, beta)).first;
  const RootDescent& desc = dit->second;

  SparseMatrix result;
  if (desc.steps.empty()) {
    result = model_.chevalley(desc.simple, d, u);
  } else {
    // (ad x)^c y = sum_k (-1)^k binom(c,k) x^{c-k} y x^k
    const auto [i, c] = desc.steps.front();
    auto ei = unit(q.size(), i);
    IntVector gamma = sub(beta, scale(c, ei));
    IntVector target = shift(u, beta, d);
    result = SparseMatrix(model_.dim_at(target), model_.dim_at(u));
    for (std::int64_t k = 0; k <= c; ++k) {
      IntVector mid = shift(u, ei, d, k);
      IntVector after = shift(mid, gamma, d);
      SparseMatrix term = power(i, d, c - k, after) * (at(gamma, d, mid) * power(i, d, k, u));
      Rational coeff = binomial(c, k);
      if (k % 2 == 1) coeff = -coeff;
      result = result + coeff * term;
    }
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

SparseMatrix root_vector_operator(const WeightModel& model, const IntVector& beta, Direction d, const IntVector& u) {
  RootVectorCache cache(model);
  return cache.at(beta, d, u);
}

}  // namespace qvc
