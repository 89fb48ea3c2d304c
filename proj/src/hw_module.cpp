#include "qvcount/hw_module.hpp"

#include <algorithm>
#include <set>

#include "qvcount/config.hpp"
#include "qvcount/errors.hpp"

namespace qvc {

std::size_t HWModule::dim_at(const IntVector& u) const {
  auto it = spaces_.find(u);
  return it == spaces_.end() ? 0 : it->second.monomials.size();
}

SparseMatrix HWModule::chevalley(std::size_t i, Direction d, const IntVector& u) const {
  if (i >= q_.size()) throw DomainError("chevalley: vertex out of range");
  IntVector target = d == Direction::raise ? sub(u, unit(q_.size(), i)) : add(u, unit(q_.size(), i));
  const auto& ops = d == Direction::raise ? e_ops_ : f_ops_;
  if (auto it = ops.find({u, i}); it != ops.end()) return it->second;
  return SparseMatrix(dim_at(target), dim_at(u));
}

std::vector<std::vector<std::size_t>> HWModule::monomials(const IntVector& u) const {
  auto it = spaces_.find(u);
  return it == spaces_.end() ? std::vector<std::vector<std::size_t>>{} : it->second.monomials;
}

Matrix HWModule::gram(const IntVector& u) const {
  auto it = spaces_.find(u);
  return it == spaces_.end() ? Matrix() : it->second.gram;
}

HWModule build_hw_module(const Quiver& q, const IntVector& w, std::optional<std::int64_t> depth, std::size_t max_dim) {
  q.check_length(w, "w");
  if (!is_nonnegative(w)) throw DomainError("framing w must be nonnegative");
  if (q.has_loops()) throw UnsupportedError("highest weight model: quiver has loops");
  if (classify_quiver(q).type != QuiverType::finite) {
    throw UnsupportedError("highest weight model needs a finite-type quiver (L_omega is infinite-dimensional otherwise)");
  }
  const std::size_t n = q.size();
  HWModule m;
  m.q_ = q;
  m.w_ = w;
  IntVector zero(n, 0);
  Matrix one(1, 1);
  one(0, 0) = 1;
  m.spaces_[zero] = {{{}}, one};
  m.total_ = 1;

  std::vector<IntVector> level{zero};
  std::int64_t h = 0;
  while (!level.empty()) {
    if (depth && h >= *depth) {
      m.truncated_ = true;
      break;
    }
    std::set<IntVector> next;
    for (const auto& u : level)
      for (std::size_t i = 0; i < n; ++i) next.insert(add(u, unit(n, i)));

    std::vector<IntVector> built;
    for (const auto& t : next) {
      // e_j-targets that exist, in vertex order; their dims lay out the image vectors.
      std::vector<std::size_t> js;
      std::vector<std::size_t> offset;
      std::size_t len = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (t[j] == 0) continue;
        auto dj = m.dim_at(sub(t, unit(n, j)));
        if (dj == 0) continue;
        js.push_back(j);
        offset.push_back(len);
        len += dj;
      }

      struct Candidate {
        std::vector<std::size_t> mono;
        std::size_t i;
        std::size_t b;
        RationalVector image;
      };
      std::vector<Candidate> cands;
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i] == 0) continue;
        IntVector s = sub(t, unit(n, i));
        auto sit = m.spaces_.find(s);
        if (sit == m.spaces_.end()) continue;
        const std::int64_t hi = weight_pairing(q, i, s, w);
        for (std::size_t b = 0; b < sit->second.monomials.size(); ++b) {
          Candidate c{sit->second.monomials[b], i, b, RationalVector(len)};
          c.mono.push_back(i);
          // e_j f_i b = f_i e_j b + delta_ij h_i b
          for (std::size_t a = 0; a < js.size(); ++a) {
            const auto j = js[a];
            IntVector sj = sub(s, unit(n, j));
            RationalVector ejb;
            if (s[j] > 0) {
              if (auto eit = m.e_ops_.find({s, j}); eit != m.e_ops_.end()) {
                RationalVector basis_b(eit->second.cols());
                basis_b[b] = 1;
                ejb = eit->second.apply(basis_b);
              }
            }
            if (!ejb.empty()) {
              if (auto fit = m.f_ops_.find({sj, i}); fit != m.f_ops_.end()) {
                auto y = fit->second.apply(ejb);
                for (std::size_t r = 0; r < y.size(); ++r) c.image[offset[a] + r] += y[r];
              }
            }
            if (i == j) c.image[offset[a] + b] += static_cast<long>(hi);
          }
          cands.push_back(std::move(c));
        }
      }
      std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.mono < y.mono; });

      Subspace images(len);
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < cands.size(); ++c)
        if (images.add(cands[c].image)) pivots.push_back(c);
      const std::size_t dim = pivots.size();
      if (dim == 0) continue;
      m.total_ += dim;
      if (m.total_ > max_dim) {
        throw ResourceError("highest weight module exceeds " + std::to_string(max_dim) +
                            " basis vectors (QVCOUNT_MAX_MODULE_DIM)");
      }

      HWModule::Space space;
      for (auto p : pivots) space.monomials.push_back(cands[p].mono);

      // e_j: V_t -> V_{t - e_j}, read straight off the pivot images.
      for (std::size_t a = 0; a < js.size(); ++a) {
        const auto j = js[a];
        auto dj = m.dim_at(sub(t, unit(n, j)));
        SparseMatrix e(dj, dim);
        for (std::size_t col = 0; col < dim; ++col)
          for (std::size_t r = 0; r < dj; ++r) e.add(r, col, cands[pivots[col]].image[offset[a] + r]);
        m.e_ops_[{t, j}] = std::move(e);
      }
      // f_i: V_{t - e_i} -> V_t, by expressing each candidate in the pivots.
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i] == 0) continue;
        IntVector s = sub(t, unit(n, i));
        auto ds = m.dim_at(s);
        if (ds == 0) continue;
        SparseMatrix f(dim, ds);
        for (const auto& c : cands) {
          if (c.i != i) continue;
          auto coeffs = images.express(c.image);
          for (std::size_t r = 0; r < dim; ++r) f.add(r, c.b, (*coeffs)[r]);
        }
        m.f_ops_[{s, i}] = std::move(f);
      }
      // <f_i b, y> = <b, e_i y>
      Matrix g(dim, dim);
      for (std::size_t r = 0; r < dim; ++r) {
        const auto& cr = cands[pivots[r]];
        IntVector s = sub(t, unit(n, cr.i));
        const Matrix& gs = m.spaces_.at(s).gram;
        const SparseMatrix& e = m.e_ops_.at({t, cr.i});
        for (std::size_t col = 0; col < dim; ++col) {
          Rational acc = 0;
          for (const auto& [row, val] : e.column(col)) acc += gs(cr.b, row) * val;
          g(r, col) = acc;
        }
      }
      space.gram = std::move(g);
      m.spaces_[t] = std::move(space);
      built.push_back(t);
    }
    level = std::move(built);
    ++h;
  }

  m.window_ = IntVector(n, 0);
  for (const auto& [u, space] : m.spaces_) {
    m.weights_.push_back(u);
    for (std::size_t i = 0; i < n; ++i) m.window_[i] = std::max(m.window_[i], u[i]);
  }
  return m;
}

HWModule build_hw_module(const Quiver& q, const IntVector& w, std::optional<std::int64_t> depth) {
  return build_hw_module(q, w, depth, Limits::from_env().max_module_dim);
}

std::size_t weight_space_dim(const WeightModel& m, const IntVector& v) {
  if (v.size() != m.quiver().size()) throw DimensionError("weight_space_dim: v has wrong length");
  if (!m.in_window(v)) return 0;
  return m.dim_at(v);
}

}  // namespace qvc
