#include "qvcount/walls.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "qvcount/errors.hpp"
#include "qvcount/weights.hpp"

namespace qvc {

std::string to_string(Space s) { return s == Space::theta ? "theta" : "lambda"; }

Hyperplane make_hyperplane(IntVector normal, Rational offset, Space space, std::string provenance) {
  auto g = gcd_of(normal);
  if (g == 0) throw DomainError("hyperplane normal must be nonzero");
  for (auto& x : normal) x /= g;
  offset /= static_cast<long>(g);
  auto first = std::find_if(normal.begin(), normal.end(), [](std::int64_t x) { return x != 0; });
  if (*first < 0) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  }
  offset.canonicalize();
  return {std::move(normal), std::move(offset), space, std::move(provenance)};
}

bool hyperplane_less(const Hyperplane& a, const Hyperplane& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  if (a.offset != b.offset) return a.offset < b.offset;
  return a.provenance < b.provenance;
}

namespace {

void sort_unique(std::vector<Hyperplane>& hs) {
  std::sort(hs.begin(), hs.end(), hyperplane_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

bool is_primitive(const IntVector& a) { return gcd_of(a) == 1; }

}  // namespace

std::vector<Hyperplane> classical_walls(const Quiver& q, const IntVector& v, const IntVector& w) {
  q.check_length(w, "w");
  std::vector<Hyperplane> out;
  for (const auto& r : roots_bounded(q, v)) out.push_back(make_hyperplane(r.vec, 0, Space::theta, "classical"));
  sort_unique(out);
  return out;
}

std::vector<Root> quantum_walls(const Quiver& q, const IntVector& v, const RationalVector& lambda) {
  q.check_length(lambda, "lambda");
  std::vector<Root> out;
  for (auto& r : roots_bounded(q, v))
    if (is_integer(dot(lambda, r.vec))) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------- chambers

namespace {

struct Ineq {
  RationalVector a;  // a . x >= b
  Rational b;
};

// Fourier-Motzkin elimination; exact.
bool feasible(std::vector<Ineq> rows, std::size_t dim) {
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Ineq> pos, neg, keep;
    for (auto& r : rows) {
      if (r.a[k] > 0) {
        pos.push_back(std::move(r));
      } else if (r.a[k] < 0) {
        neg.push_back(std::move(r));
      } else {
        keep.push_back(std::move(r));
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Rational sp = 1 / p.a[k];
        Rational sn = -1 / n.a[k];
        Ineq c{RationalVector(dim), p.b * sp + n.b * sn};
        for (std::size_t j = 0; j < dim; ++j) c.a[j] = p.a[j] * sp + n.a[j] * sn;
        c.a[k] = 0;
        keep.push_back(std::move(c));
      }
    }
    // Drop exact duplicates to keep the system small.
    std::sort(keep.begin(), keep.end(), [](const Ineq& x, const Ineq& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
    keep.erase(std::unique(keep.begin(), keep.end(),
                           [](const Ineq& x, const Ineq& y) { return x.a == y.a && x.b == y.b; }),
               keep.end());
    rows = std::move(keep);
  }
  return std::all_of(rows.begin(), rows.end(), [](const Ineq& r) { return r.b <= 0; });
}

}  // namespace

std::vector<std::vector<int>> chambers(const std::vector<Hyperplane>& walls, std::size_t rank) {
  if (rank > 4) throw UnsupportedError("chamber enumeration is limited to rank <= 4");
  for (const auto& h : walls) {
    if (h.normal.size() != rank) throw DimensionError("wall normal length does not match the rank");
    if (h.offset != 0) throw DomainError("chamber enumeration needs a central arrangement");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> signs;
  std::vector<Ineq> rows;
  // Strict homogeneous inequalities are feasible iff the same system with >= 1 is.
  std::function<void()> rec = [&]() {
    if (signs.size() == walls.size()) {
      out.push_back(signs);
      return;
    }
    for (int s : {1, -1}) {
      const auto& h = walls[signs.size()];
      Ineq r{RationalVector(rank), 1};
      for (std::size_t j = 0; j < rank; ++j) r.a[j] = static_cast<long>(s * h.normal[j]);
      rows.push_back(r);
      if (feasible(rows, rank)) {
        signs.push_back(s);
        rec();
        signs.pop_back();
      }
      rows.pop_back();
    }
  };
  rec();
  return out;
}

// ---------------------------------------------------------------- slices

RationalVector SliceData::restrict(const RationalVector& lambda) const {
  RationalVector out = offset;
  for (std::size_t i = 0; i < linear.size(); ++i) out[i] += dot(lambda, linear[i]);
  return out;
}

SliceData slice_data(const Quiver& q, const IntVector& v, const IntVector& w, const IntVector& v0,
                     const std::vector<Summand>& summands) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  q.check_length(v0, "v0");
  if (!is_nonnegative(v0)) throw DomainError("v0 must be nonnegative");
  if (summands.empty()) throw DomainError("a slice needs at least one root summand");
  IntVector total = v0;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    q.check_length(s.root, "summand");
    if (s.mult < 1) throw DomainError("summand multiplicities must be positive");
    if (root_kind(q, s.root) == RootKind::none) throw DomainError("summand (" + join(s.root) + ") is not a root");
    for (std::size_t j = 0; j < i; ++j)
      if (summands[j].root == s.root) throw DomainError("summands must be pairwise distinct");
    total = add(total, scale(s.mult, s.root));
  }
  if (total != v) throw DomainError("v0 + sum n_i v^i = (" + join(total) + ") differs from v = (" + join(v) + ")");

  const std::size_t k = summands.size();
  std::vector<Arrow> arrows;
  SliceData d;
  for (std::size_t i = 0; i < k; ++i) {
    auto loops = p_value(q, summands[i].root);
    for (std::int64_t a = 0; a < loops; ++a) arrows.emplace_back(i, i);
    for (std::size_t j = i + 1; j < k; ++j) {
      auto count = -tits_form(q, summands[i].root, summands[j].root);
      if (count < 0) {
        throw DomainError("summands " + std::to_string(i) + " and " + std::to_string(j) +
                          " pair positively; no slice quiver");
      }
      for (std::int64_t a = 0; a < count; ++a) arrows.emplace_back(i, j);
    }
    auto hw = dot(w, summands[i].root) - tits_form(q, v0, summands[i].root);
    if (hw < 0) throw DomainError("negative slice framing at summand " + std::to_string(i));
    d.hat_w.push_back(hw);
    d.hat_v.push_back(summands[i].mult);
    d.linear.push_back(summands[i].root);
  }
  d.hat_quiver = Quiver(k, std::move(arrows), "slice");
  auto rho = rho_vector(q, v, w);
  auto hat_rho = rho_vector(d.hat_quiver, d.hat_v, d.hat_w);
  d.offset.resize(k);
  for (std::size_t i = 0; i < k; ++i) d.offset[i] = hat_rho[i] - dot(rho, d.linear[i]);
  return d;
}

// ---------------------------------------------------------------- singular parameters

SingularReport singular_hyperplanes(const Quiver& q, const IntVector& v, const IntVector& w) {
  q.check_length(w, "w");
  if (classify_quiver(q).type == QuiverType::indefinite) {
    throw UnsupportedError("singular_hyperplanes needs finite or affine type");
  }
  SingularReport rep;
  auto rho = rho_vector(q, v, w);
  for (const auto& r : roots_bounded(q, v)) {
    const auto& a = r.vec;
    if (!is_primitive(a)) continue;
    std::int64_t kmax = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) kmax = std::min(kmax, v[i] / a[i]);
    std::int64_t k = 0;
    for (std::int64_t c = kmax; c >= 1; --c) {
      IntVector x = sub(v, scale(c, a));
      if (dot(w, x) * 2 - tits_form(q, x, x) >= 0) {
        k = c;
        break;
      }
    }
    if (k == 0) continue;
    const auto loops = p_value(q, a);
    const auto hat_w = dot(w, a) - tits_form(q, v, a) + k * tits_form(q, a, a);
    // <alpha, lambda - rho(v)> = s - rho_hat with rho_hat = hat_w / 2 for one vertex
    Rational base = dot(rho, a) - frac(hat_w, 2);
    if (loops == 0) {
      for (std::int64_t s = 1 - hat_w; s <= -1; ++s)
        rep.planes.push_back(make_hyperplane(a, base + static_cast<long>(s), Space::lambda, "singular-conjecture"));
    } else if (loops == 1) {
      std::set<Rational> values;
      for (std::int64_t m = 1; m <= k; ++m)
        for (std::int64_t num = -hat_w * m + 1; num <= -1; ++num) values.insert(frac(num, m));
      for (const auto& s : values) {
        rep.planes.push_back(make_hyperplane(a, base + s, Space::lambda, "singular-conjecture"));
      }
    } else {
      rep.unknown.push_back({a, k, loops, k, hat_w});
    }
  }
  sort_unique(rep.planes);
  return rep;
}

std::vector<Hyperplane> translation_bad_hyperplanes(const Quiver& q, const IntVector& v, const IntVector& w,
                                                    const IntVector& alpha, const IntVector& chi) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  q.check_length(alpha, "alpha");
  q.check_length(chi, "chi");
  std::vector<Hyperplane> out;
  const auto kind = root_kind(q, alpha);

  if (kind == RootKind::imaginary) {
    auto cls = classify_quiver(q);
    if (cls.type != QuiverType::affine || alpha != *cls.delta) {
      throw DomainError("imaginary alpha is only handled for alpha = delta on an affine quiver");
    }
    const auto& delta = *cls.delta;
    std::int64_t n = v[0] / delta[0];
    if (v != scale(n, delta)) throw DomainError("affine clause needs v = n delta");
    auto hot = std::find(w.begin(), w.end(), 1);
    if (height(w) != 1 || hot == w.end() || delta[static_cast<std::size_t>(hot - w.begin())] != 1) {
      throw DomainError("affine clause needs w to be the unit vector of an extending vertex");
    }
    const auto c = dot(chi, delta);
    std::vector<std::int64_t> ms;
    for (std::int64_t m = 1 - c; m <= 0; ++m) ms.push_back(m);   // c > 0
    for (std::int64_t m = 1; m <= -c; ++m) ms.push_back(m);      // c < 0
    std::set<Rational> fracs;
    for (std::int64_t qq = 2; qq <= n; ++qq)
      for (std::int64_t p = 1 - qq; p <= -1; ++p) fracs.insert(frac(p, qq));
    for (auto m : ms)
      for (const auto& f : fracs) out.push_back(make_hyperplane(delta, f + static_cast<long>(m), Space::lambda, "translation"));
    sort_unique(out);
    return out;
  }

  if (kind != RootKind::real || !leq(alpha, v)) {
    throw DomainError("alpha must be a real root with alpha <= v (ker alpha a classical wall)");
  }
  const auto c = dot(chi, alpha);
  if (c == 0) return out;

  const auto A = dot(w, alpha) - tits_form(q, v, alpha);
  const auto D4 = A * A - 2 * tits_form(q, v, v) + 4 * dot(w, v);
  std::int64_t kmax = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) kmax = std::min(kmax, v[i] / alpha[i]);
  std::int64_t k = 0;
  for (std::int64_t cand = kmax; cand >= 1; --cand) {
    const auto t = 2 * cand + A;  // k + A/2 <= sqrt(D4)/2
    if (D4 >= 0 && (t < 0 || t * t <= D4)) {
      k = cand;
      break;
    }
  }
  if (k == 0) return out;
  const auto wp = A + 2 * k;
  const Rational h(wp, 2);
  auto rho = rho_vector(q, v, w);
  const Rational shift = dot(rho, alpha);
  const std::int64_t reach = (wp < 0 ? -wp : wp) + (c < 0 ? -c : c) + 1;
  for (std::int64_t j = -reach; j <= reach; ++j) {
    Rational m = h + static_cast<long>(j);
    bool first = m >= h && m + static_cast<long>(c) <= -h;
    bool second = m <= -h && m + static_cast<long>(c) >= h;
    if (first || second) out.push_back(make_hyperplane(alpha, m + shift, Space::lambda, "translation"));
  }
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------- perverse constants

std::int64_t PerverseProfile::filtration_index(std::int64_t i) const {
  if (i < 0) throw DomainError("filtration index needs i >= 0");
  return q + 1 - i / (m - 1);
}

PerverseProfile perverse_profile(std::int64_t n, std::int64_t m) {
  if (m < 2) throw DomainError("perverse_profile needs m >= 2");
  if (n < 1) throw DomainError("perverse_profile needs n >= 1");
  PerverseProfile p;
  p.n = n;
  p.m = m;
  p.q = n / m;
  for (std::int64_t i = 0; i <= p.q + 1; ++i) p.d.push_back((p.q + 1 - i) * (m - 1));
  for (std::int64_t i = 0; i <= p.d.front(); ++i) p.filtration.push_back(p.filtration_index(i));
  return p;
}

}  // namespace qvc
