#include "qvcount/fock.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qvcount/config.hpp"
#include "qvcount/errors.hpp"

namespace qvc {

std::string to_string(const Multipartition& mu) {
  std::string s = "[";
  for (std::size_t c = 0; c < mu.size(); ++c) {
    if (c) s += ",";
    s += to_string(mu[c]);
  }
  return s + "]";
}

int size(const Multipartition& mu) {
  int s = 0;
  for (const auto& p : mu) s += size(p);
  return s;
}

std::size_t residue(int row, int col, std::int64_t charge, std::size_t level) {
  auto l = static_cast<std::int64_t>(level);
  std::int64_t r = (static_cast<std::int64_t>(col) - row + charge) % l;
  if (r < 0) r += l;
  return static_cast<std::size_t>(r);
}

std::vector<Node> nodes_of_residue(const Multipartition& mu, std::size_t i, const IntVector& charges, std::size_t level) {
  std::vector<Node> out;
  for (std::size_t c = 0; c < mu.size(); ++c) {
    const auto& p = mu[c];
    const int L = static_cast<int>(p.size());
    for (int r = 0; r <= L; ++r) {
      int row = r < L ? p[r] : 0;
      if ((r == 0 || p[r - 1] > row) && residue(r, row, charges[c], level) == i) out.push_back({c, r, row, true});
      if (r < L && (r == L - 1 || p[r + 1] < row) && residue(r, row - 1, charges[c], level) == i) {
        out.push_back({c, r, row - 1, false});
      }
    }
  }
  return out;
}

std::optional<Multipartition> crystal_op(const Multipartition& mu, std::size_t i, CrystalKind kind,
                                         const IntVector& charges, std::size_t level) {
  if (charges.size() != mu.size()) throw DimensionError("crystal_op: one charge per component required");
  if (level < 2) throw UnsupportedError("crystal operators need at least two colours");
  if (i >= level) throw DomainError("crystal_op: colour out of range");
  auto nodes = nodes_of_residue(mu, i, charges, level);
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.component != b.component) return a.component < b.component;
    return a.col - a.row > b.col - b.row;
  });
  std::vector<Node> word;
  for (const auto& nd : nodes) {
    if (!nd.addable && !word.empty() && word.back().addable) {
      word.pop_back();
      continue;
    }
    word.push_back(nd);
  }
  Multipartition out = mu;
  if (kind == CrystalKind::f) {
    auto it = std::find_if(word.begin(), word.end(), [](const Node& n) { return n.addable; });
    if (it == word.end()) return std::nullopt;
    auto& p = out[it->component];
    if (it->row == static_cast<int>(p.size())) {
      p.push_back(1);
    } else {
      ++p[it->row];
    }
    return out;
  }
  auto it = std::find_if(word.rbegin(), word.rend(), [](const Node& n) { return !n.addable; });
  if (it == word.rend()) return std::nullopt;
  auto& p = out[it->component];
  if (--p[it->row] == 0) p.pop_back();
  return out;
}

// ---------------------------------------------------------------- basis

std::vector<Multipartition> multipartitions_of(int n, std::size_t r) {
  std::vector<Multipartition> out;
  if (r == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Multipartition cur(r);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int rest) {
    if (c + 1 == r) {
      for (const auto& p : partitions_of(rest)) {
        cur[c] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = rest; k >= 0; --k) {
      for (const auto& p : partitions_of(k)) {
        cur[c] = p;
        rec(c + 1, rest - k);
      }
    }
  };
  rec(0, n);
  return out;
}

std::vector<std::pair<Partition, int>> add_border_strips(const Partition& p, int k) {
  std::vector<std::pair<Partition, int>> out;
  if (k <= 0) return out;
  const int L = static_cast<int>(p.size()) + k;
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + (L - 1 - i);
  std::set<int> present(beta.begin(), beta.end());
  for (int i = 0; i < L; ++i) {
    int moved = beta[i] + k;
    if (present.count(moved)) continue;
    int between = 0;
    for (int b : beta)
      if (b > beta[i] && b < moved) ++between;
    std::vector<int> nb = beta;
    nb[i] = moved;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    Partition q;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) q.push_back(part);
    }
    out.emplace_back(std::move(q), between % 2 == 0 ? 1 : -1);
  }
  return out;
}

FockSpace::FockSpace(std::size_t level, IntVector charges, int cap)
    : level_(level), charges_(std::move(charges)), cap_(cap) {
  if (level_ == 0) throw DomainError("Fock space needs at least one colour");
  if (cap_ < 0) throw DomainError("Fock space cap must be nonnegative");
  for (int d = 0; d <= cap_; ++d) {
    for (auto& mu : multipartitions_of(d, charges_.size())) {
      index_.emplace(mu, basis_.size());
      basis_.push_back(std::move(mu));
    }
  }
}

std::optional<std::size_t> FockSpace::index(const Multipartition& mu) const {
  auto it = index_.find(mu);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FockSpace::degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (size(basis_[k]) == d) out.push_back(k);
  return out;
}

SparseMatrix FockSpace::chevalley_matrix(std::size_t i, Kind kind) const {
  if (level_ < 2) throw UnsupportedError("no Chevalley generators on the one-colour Fock space");
  if (i >= level_) throw DomainError("colour out of range");
  SparseMatrix f(dim(), dim());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (size(basis_[k]) >= cap_) continue;
    for (const auto& nd : nodes_of_residue(basis_[k], i, charges_, level_)) {
      if (!nd.addable) continue;
      Multipartition mu = basis_[k];
      auto& p = mu[nd.component];
      if (nd.row == static_cast<int>(p.size())) {
        p.push_back(1);
      } else {
        ++p[nd.row];
      }
      f.add(index_.at(mu), k, 1);
    }
  }
  return kind == Kind::f ? f : f.transpose();
}

SparseMatrix FockSpace::cartan_matrix(std::size_t i) const {
  if (level_ < 2) throw UnsupportedError("no Chevalley generators on the one-colour Fock space");
  SparseMatrix h(dim(), dim());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    long s = 0;
    for (const auto& nd : nodes_of_residue(basis_[k], i, charges_, level_)) s += nd.addable ? 1 : -1;
    h.add(k, k, s);
  }
  return h;
}

SparseMatrix FockSpace::heisenberg_matrix(int k) const {
  if (k == 0) throw DomainError("heisenberg_matrix: k must be nonzero");
  const int a = k < 0 ? -k : k;
  SparseMatrix b(dim(), dim());
  for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
    if (size(basis_[idx]) + a > cap_) continue;
    for (std::size_t c = 0; c < basis_[idx].size(); ++c) {
      for (auto& [p, sign] : add_border_strips(basis_[idx][c], a)) {
        Multipartition mu = basis_[idx];
        mu[c] = std::move(p);
        b.add(index_.at(mu), idx, sign);
      }
    }
  }
  return k < 0 ? b : b.transpose();
}

// ---------------------------------------------------------------- filtrations

FiltrationReport heis_filtration_dims(int m, int r, int n, std::size_t max_dim) {
  if (m < 2) throw DomainError("heis_filtration_dims needs m >= 2");
  if (r < 1) throw DomainError("heis_filtration_dims needs r >= 1");
  if (n < 0) throw DomainError("heis_filtration_dims needs n >= 0");
  std::size_t total = 0;
  for (int d = 0; d <= n; ++d) {
    total += multipartitions_of(d, static_cast<std::size_t>(r)).size();
    if (total > max_dim) {
      throw ResourceError("Fock space up to degree " + std::to_string(n) + " exceeds " + std::to_string(max_dim) +
                          " basis vectors (QVCOUNT_MAX_MODULE_DIM)");
    }
  }
  FockSpace F(1, IntVector(static_cast<std::size_t>(r), 0), n);
  auto top = F.degree(n);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t a = 0; a < top.size(); ++a) pos[top[a]] = a;

  std::map<int, SparseMatrix> creation;
  for (int s = 1; s * m <= n; ++s) creation.emplace(s, F.heisenberg_matrix(-s * m));

  auto span_dim = [&](int J) {
    Subspace span(top.size());
    for (int S = J; S * m <= n; ++S) {
      auto sources = F.degree(n - m * S);
      for (const auto& pi : partitions_of(S)) {
        for (auto src : sources) {
          RationalVector x(F.dim());
          x[src] = 1;
          for (int part : pi) x = creation.at(part).apply(x);
          RationalVector y(top.size());
          for (const auto& [g, a] : pos) y[a] = x[g];
          span.add(y);
        }
      }
    }
    return span.dim();
  };

  FiltrationReport rep{n, m, r, {top.size()}};
  const int step = r * m - 1;
  std::map<int, std::size_t> by_J;
  for (int j = 1;; ++j) {
    int J = (j + step - 1) / step;
    auto it = by_J.find(J);
    if (it == by_J.end()) it = by_J.emplace(J, span_dim(J)).first;
    rep.dims.push_back(it->second);
    if (it->second == 0) break;
  }
  return rep;
}

FiltrationReport heis_filtration_dims(int m, int r, int n) {
  return heis_filtration_dims(m, r, n, Limits::from_env().max_module_dim);
}

std::int64_t o_support_bound(const Quiver& q, const IntVector& v, const IntVector& w, std::int64_t m, std::int64_t s) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  return dot(w, v) - tits_form(q, v, v) / 2 - s * (height(w) * m - 1);
}

// ---------------------------------------------------------------- L_omega inside F

std::optional<std::size_t> cyclic_length(const Quiver& q) {
  const auto l = q.size();
  if (l == 1) return q.loops(0) == 1 && q.arrows().size() == 1 ? std::optional<std::size_t>(1) : std::nullopt;
  if (q.arrows().size() != l || q.has_loops()) return std::nullopt;
  for (std::size_t i = 0; i < l; ++i) {
    auto j = (i + 1) % l;
    std::size_t expect = l == 2 ? 2 : 1;
    if (q.edges(i, j) != expect) return std::nullopt;
  }
  return l;
}

namespace {

Multipartition with_node(Multipartition mu, const Node& nd) {
  auto& p = mu[nd.component];
  if (nd.row == static_cast<int>(p.size())) {
    p.push_back(1);
  } else {
    ++p[nd.row];
  }
  return mu;
}

}  // namespace

FockWeightModel::FockWeightModel(const Quiver& q, const IntVector& w, const IntVector& window, std::size_t max_dim)
    : q_(q), w_(w), window_(window) {
  q.check_length(w, "w");
  q.check_length(window, "window");
  auto l = cyclic_length(q);
  if (!l || *l < 2) throw UnsupportedError("Fock model needs a cyclic quiver with at least two vertices");
  if (!is_nonnegative(w) || !is_nonnegative(window)) throw DomainError("w and the window must be nonnegative");
  for (std::size_t k = 0; k < q.size(); ++k)
    for (std::int64_t c = 0; c < w[k]; ++c) charges_.push_back(static_cast<std::int64_t>(k));
  const std::size_t n = q.size();
  const std::size_t r = charges_.size();

  // Raw f_i between the Fock bases at s and s + e_i.
  auto raw_f = [&](const IntVector& s, std::size_t i) {
    const Level& from = levels_.at(s);
    const Level& to = levels_.at(add(s, unit(n, i)));
    SparseMatrix f(to.basis.size(), from.basis.size());
    for (std::size_t k = 0; k < from.basis.size(); ++k)
      for (const auto& nd : nodes_of_residue(from.basis[k], i, charges_, n))
        if (nd.addable) f.add(to.index.at(with_node(from.basis[k], nd)), k, 1);
    return f;
  };

  std::size_t total = 0;
  std::map<std::pair<IntVector, std::size_t>, SparseMatrix> raw;
  for (const auto& u : box_vectors(window)) {
    Level lev;
    if (height(u) == 0) {
      lev.basis.push_back(Multipartition(r));
    } else {
      std::set<Multipartition> found;
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        auto it = levels_.find(sub(u, unit(n, i)));
        if (it == levels_.end()) continue;
        for (const auto& mu : it->second.basis)
          for (const auto& nd : nodes_of_residue(mu, i, charges_, n))
            if (nd.addable) found.insert(with_node(mu, nd));
      }
      if (found.empty()) continue;
      lev.basis.assign(found.begin(), found.end());
    }
    for (std::size_t k = 0; k < lev.basis.size(); ++k) lev.index.emplace(lev.basis[k], k);
    lev.span = Subspace(lev.basis.size());
    total += lev.basis.size();
    if (total > max_dim) {
      throw ResourceError("Fock window exceeds " + std::to_string(max_dim) + " basis vectors (QVCOUNT_MAX_MODULE_DIM)");
    }
    levels_.emplace(u, std::move(lev));
    Level& cur = levels_.at(u);
    if (height(u) == 0) {
      cur.span.add(RationalVector{1});
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        IntVector s = sub(u, unit(n, i));
        if (!levels_.count(s)) continue;
        auto f = raw_f(s, i);
        for (const auto& g : levels_.at(s).span.generators()) cur.span.add(f.apply(g));
        raw.emplace(std::make_pair(s, i), std::move(f));
      }
    }
    if (cur.span.dim() > 0) weights_.push_back(u);
  }

  // Chevalley operators in the spanning bases.
  auto express = [](const Level& target, const RationalVector& y) {
    auto c = target.span.express(y);
    if (!c) throw std::logic_error("Fock model: image left the submodule generated by the vacuum");
    return *c;
  };
  for (const auto& [key, f] : raw) {
    const auto& [s, i] = key;
    IntVector t = add(s, unit(n, i));
    const Level& from = levels_.at(s);
    const Level& to = levels_.at(t);
    SparseMatrix lower(to.span.dim(), from.span.dim());
    const auto& gens = from.span.generators();
    for (std::size_t col = 0; col < gens.size(); ++col) {
      auto c = express(to, f.apply(gens[col]));
      for (std::size_t row = 0; row < c.size(); ++row) lower.add(row, col, c[row]);
    }
    SparseMatrix e = f.transpose();
    SparseMatrix up(from.span.dim(), to.span.dim());
    const auto& tgens = to.span.generators();
    for (std::size_t col = 0; col < tgens.size(); ++col) {
      auto c = express(from, e.apply(tgens[col]));
      for (std::size_t row = 0; row < c.size(); ++row) up.add(row, col, c[row]);
    }
    lower_.emplace(key, std::move(lower));
    raise_.emplace(std::make_pair(t, i), std::move(up));
  }
}

std::size_t FockWeightModel::dim_at(const IntVector& u) const {
  auto it = levels_.find(u);
  return it == levels_.end() ? 0 : it->second.span.dim();
}

std::size_t FockWeightModel::fock_dim_at(const IntVector& u) const {
  auto it = levels_.find(u);
  return it == levels_.end() ? 0 : it->second.basis.size();
}

SparseMatrix FockWeightModel::chevalley(std::size_t i, Direction d, const IntVector& u) const {
  if (i >= q_.size()) throw DomainError("chevalley: vertex out of range");
  IntVector target = d == Direction::raise ? sub(u, unit(q_.size(), i)) : add(u, unit(q_.size(), i));
  const auto& ops = d == Direction::raise ? raise_ : lower_;
  if (auto it = ops.find({u, i}); it != ops.end()) return it->second;
  return SparseMatrix(dim_at(target), dim_at(u));
}

}  // namespace qvc
