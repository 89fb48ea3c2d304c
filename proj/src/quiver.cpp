#include "qvcount/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "qvcount/config.hpp"
#include "qvcount/errors.hpp"
#include "qvcount/linalg.hpp"

namespace qvc {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows, std::string name)
    : n_(vertex_count), arrows_(std::move(arrows)), name_(std::move(name)) {
  if (n_ == 0) throw DomainError("quiver must have at least one vertex");
  loops_.assign(n_, 0);
  adj_.assign(n_ * n_, 0);
  for (const auto& [t, h] : arrows_) {
    if (t >= n_ || h >= n_) {
      throw DomainError("arrow (" + std::to_string(t) + "," + std::to_string(h) + ") out of range for " +
                        std::to_string(n_) + " vertices");
    }
    if (t == h) {
      ++loops_[t];
    } else {
      ++adj_[t * n_ + h];
      ++adj_[h * n_ + t];
    }
  }
}

bool Quiver::has_loops() const {
  return std::any_of(loops_.begin(), loops_.end(), [](std::size_t l) { return l > 0; });
}

std::int64_t Quiver::cartan(std::size_t i, std::size_t j) const {
  if (i == j) return 2 - 2 * static_cast<std::int64_t>(loops_[i]);
  return -static_cast<std::int64_t>(edges(i, j));
}

bool Quiver::is_connected() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n_; ++j) {
      if (!seen[j] && edges(i, j) > 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n_;
}

Quiver Quiver::reversed() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& [t, h] : arrows_) rev.emplace_back(h, t);
  return Quiver(n_, std::move(rev), name_.empty() ? "" : name_ + "^op");
}

void Quiver::check_length(const IntVector& x, const char* what) const {
  if (x.size() != n_) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(x.size()) + ", quiver has " +
                         std::to_string(n_) + " vertices");
  }
}

void Quiver::check_length(const RationalVector& x, const char* what) const {
  if (x.size() != n_) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(x.size()) + ", quiver has " +
                         std::to_string(n_) + " vertices");
  }
}

// ---------------------------------------------------------------- construction

Quiver builtin_quiver(std::string_view name) {
  std::string s(name);
  if (s == "a1" || s == "vertex") return Quiver(1, {}, "a1");
  if (s == "a2") return Quiver(2, {{0, 1}}, "a2");
  if (s == "a3") return Quiver(3, {{0, 1}, {1, 2}}, "a3");
  if (s == "d4") return Quiver(4, {{0, 1}, {0, 2}, {0, 3}}, "d4");
  if (s == "jordan") return Quiver(1, {{0, 0}}, "jordan");
  if (s.rfind("cyclic:", 0) == 0) {
    auto ell = parse_int_list(s.substr(7));
    if (ell.size() != 1 || ell[0] < 1) throw ParseError("cyclic quiver needs a positive length, got '" + s + "'");
    auto l = static_cast<std::size_t>(ell[0]);
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < l; ++i) arrows.emplace_back(i, (i + 1) % l);
    return Quiver(l, std::move(arrows), "cyclic:" + std::to_string(l));
  }
  throw ParseError("unknown builtin quiver '" + s + "'");
}

namespace {

Quiver quiver_from_json(const nlohmann::json& j, std::string name) {
  if (!j.contains("vertices")) throw ParseError("quiver description lacks 'vertices'");
  if (!j.at("vertices").is_number_integer() || j.at("vertices").get<long long>() < 1) {
    throw ParseError("'vertices' must be a positive integer");
  }
  auto n = j.at("vertices").get<std::size_t>();
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const auto& a = j.at("arrows");
    if (!a.is_array()) throw ParseError("'arrows' must be a list of [tail, head] pairs");
    for (const auto& pair : a) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer() ||
          pair[0].get<long long>() < 0 || pair[1].get<long long>() < 0) {
        throw ParseError("malformed arrow " + pair.dump() + " (expected [tail, head])");
      }
      arrows.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
    }
  }
  if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
  try {
    return Quiver(n, std::move(arrows), std::move(name));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Quiver parse_quiver_text(std::string_view text) {
  std::string body = strip(std::string(text));
  try {
    if (!body.empty() && body.front() == '{') return quiver_from_json(nlohmann::json::parse(body), "");

    // key: value lines; a value may continue over lines until its brackets balance.
    nlohmann::json j = nlohmann::json::object();
    std::istringstream in(body);
    std::string line;
    std::string key;
    std::string value;
    int depth = 0;
    auto flush = [&]() {
      if (key.empty()) return;
      std::string v = strip(value);
      if (key == "name") {
        j[key] = v;
      } else {
        j[key] = nlohmann::json::parse(v);
      }
      key.clear();
      value.clear();
    };
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (strip(line).empty()) continue;
      if (depth == 0) {
        flush();
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value', got '" + strip(line) + "'");
        key = strip(line.substr(0, colon));
        value = line.substr(colon + 1);
      } else {
        value += " " + line;
      }
      depth = 0;
      for (char c : value) depth += (c == '[') - (c == ']');
      if (depth < 0) throw ParseError("unbalanced brackets in quiver description");
    }
    if (depth != 0) throw ParseError("unterminated list in quiver description");
    flush();
    return quiver_from_json(j, "");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed quiver description: ") + e.what());
  }
}

Quiver load_quiver(std::string_view name_or_path) {
  std::string s(name_or_path);
  try {
    return builtin_quiver(s);
  } catch (const ParseError&) {
  }
  std::ifstream in(s);
  if (!in) throw ParseError("'" + s + "' is neither a builtin quiver nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  Quiver q = parse_quiver_text(buf.str());
  if (q.name().empty()) return Quiver(q.size(), q.arrows(), s);
  return q;
}

std::string quiver_to_text(const Quiver& q) {
  std::string out = "vertices: " + std::to_string(q.size()) + "\narrows: [";
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    if (a) out += ", ";
    out += "[" + std::to_string(q.arrows()[a].first) + ", " + std::to_string(q.arrows()[a].second) + "]";
  }
  return out + "]\n";
}

// ---------------------------------------------------------------- forms

std::int64_t tits_form(const Quiver& q, const IntVector& x, const IntVector& y) {
  q.check_length(x, "x");
  q.check_length(y, "y");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < q.size(); ++k) s += 2 * x[k] * y[k];
  for (const auto& [t, h] : q.arrows()) s -= x[t] * y[h] + x[h] * y[t];
  return s;
}

std::int64_t p_value(const Quiver& q, const IntVector& v) { return 1 - tits_form(q, v, v) / 2; }

std::string to_string(QuiverType t) {
  switch (t) {
    case QuiverType::finite:
      return "finite";
    case QuiverType::affine:
      return "affine";
    case QuiverType::indefinite:
      return "indefinite";
  }
  return "indefinite";
}

namespace {

Matrix cartan_matrix(const Quiver& q, std::optional<std::size_t> drop = std::nullopt) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!drop || *drop != i) keep.push_back(i);
  Matrix m(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) m(a, b) = static_cast<long>(q.cartan(keep[a], keep[b]));
  return m;
}

// Symmetric elimination without pivoting: positive definite iff every pivot is positive.
bool positive_definite(Matrix m) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t r = k + 1; r < m.rows(); ++r) {
      if (m(r, k) == 0) continue;
      Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < m.cols(); ++c) m(r, c) -= f * m(k, c);
    }
  }
  return true;
}

}  // namespace

QuiverClass classify_quiver(const Quiver& q) {
  if (!q.is_connected()) throw UnsupportedError("disconnected quiver: classify each component separately");
  Matrix c = cartan_matrix(q);
  if (positive_definite(c)) return {QuiverType::finite, std::nullopt};
  auto null = nullspace(c);
  if (null.size() != 1) return {QuiverType::indefinite, std::nullopt};

  // Scale the radical generator to a primitive integer vector.
  mpz_class l = 1;
  for (const auto& x : null[0]) l = lcm(l, x.get_den());
  IntVector delta(q.size());
  std::int64_t g = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational y = null[0][i] * l;
    delta[i] = y.get_num().get_si();
    g = std::gcd(g, delta[i] < 0 ? -delta[i] : delta[i]);
  }
  for (auto& d : delta) d /= g;
  if (delta[0] < 0)
    for (auto& d : delta) d = -d;
  if (!std::all_of(delta.begin(), delta.end(), [](std::int64_t d) { return d > 0; })) {
    return {QuiverType::indefinite, std::nullopt};
  }
  if (!positive_definite(cartan_matrix(q, 0))) return {QuiverType::indefinite, std::nullopt};
  return {QuiverType::affine, delta};
}

// ---------------------------------------------------------------- vectors

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_nonnegative(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t height(const IntVector& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

IntVector scale(std::int64_t k, const IntVector& a) {
  IntVector c(a);
  for (auto& x : c) x *= k;
  return c;
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

std::vector<IntVector> box_vectors(const IntVector& bound) {
  std::vector<IntVector> out;
  if (!is_nonnegative(bound)) return out;
  IntVector x(bound.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (x[i] < bound[i]) {
        ++x[i];
        break;
      }
      x[i] = 0;
      if (i == 0) return out;
    }
    if (x.empty()) return out;
  }
}

// ---------------------------------------------------------------- roots

namespace {

bool support_connected(const Quiver& q, const IntVector& x) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) supp.push_back(i);
  if (supp.empty()) return false;
  std::vector<bool> seen(q.size(), false);
  std::vector<std::size_t> stack{supp[0]};
  seen[supp[0]] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (auto j : supp) {
      if (!seen[j] && q.edges(i, j) > 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == supp.size();
}

}  // namespace

RootKind root_kind(const Quiver& q, const IntVector& alpha) {
  q.check_length(alpha, "root candidate");
  if (!is_nonnegative(alpha) || height(alpha) == 0) return RootKind::none;
  IntVector x = alpha;
  while (true) {
    if (!is_nonnegative(x)) return RootKind::none;
    if (height(x) == 1) {
      auto i = static_cast<std::size_t>(std::find(x.begin(), x.end(), 1) - x.begin());
      return q.loops(i) == 0 ? RootKind::real : RootKind::imaginary;
    }
    // Pairings can only be positive at loop-free vertices in the support.
    bool reflected = false;
    for (std::size_t i = 0; i < q.size() && !reflected; ++i) {
      if (q.loops(i) != 0) continue;
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < q.size(); ++j) pairing += q.cartan(i, j) * x[j];
      if (pairing > 0) {
        x[i] -= pairing;
        reflected = true;
      }
    }
    if (!reflected) return support_connected(q, x) ? RootKind::imaginary : RootKind::none;
  }
}

std::vector<Root> roots_bounded(const Quiver& q, const IntVector& bound) {
  q.check_length(bound, "bound");
  std::vector<Root> out;
  for (auto& x : box_vectors(bound)) {
    if (height(x) == 0) continue;
    auto kind = root_kind(q, x);
    if (kind != RootKind::none) out.push_back({std::move(x), kind});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Root& a, const Root& b) { return height(a.vec) < height(b.vec); });
  return out;
}

// ---------------------------------------------------------------- flatness

std::int64_t flatness_margin(const Quiver& q, const IntVector& v, const IntVector& w, const Decomposition& d) {
  std::int64_t rhs = dot(w, d.v0) + p_value(q, d.v0);
  for (const auto& r : d.roots) rhs += p_value(q, r);
  return p_value(q, v) + dot(w, v) - rhs;
}

FlatResult cb_flat(const Quiver& q, const IntVector& v, const IntVector& w, long max_total) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  if (!is_nonnegative(v) || !is_nonnegative(w)) throw DomainError("v and w must be nonnegative");
  if (height(v) > max_total) {
    throw ResourceError("cb_flat: sum of v is " + std::to_string(height(v)) + ", cap is " +
                        std::to_string(max_total) + " (QVCOUNT_MAX_FLAT_TOTAL)");
  }

  // Mixed-radix indexing of the box 0 <= u <= v.
  const std::size_t n = q.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::size_t>(v[i] + 1);
  auto index = [&](const IntVector& u) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += stride[i] * static_cast<std::size_t>(u[i]);
    return k;
  };

  auto box = box_vectors(v);  // lexicographic, so every u - r is visited before u
  auto roots = roots_bounded(q, v);
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.vec < b.vec; });

  // best[u]: largest sum of p over decompositions of u into roots.
  constexpr auto kUnset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> best(box.size(), kUnset);
  std::vector<std::size_t> choice(box.size(), 0);
  best[0] = 0;
  for (const auto& u : box) {
    auto iu = index(u);
    if (iu == 0) continue;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (!leq(roots[r].vec, u)) continue;
      auto rest = best[index(sub(u, roots[r].vec))];
      if (rest == kUnset) continue;
      auto val = rest + p_value(q, roots[r].vec);
      if (val > best[iu]) {
        best[iu] = val;
        choice[iu] = r;
      }
    }
  }

  const std::int64_t lead = p_value(q, v) + dot(w, v);
  FlatResult res;
  std::optional<IntVector> worst_v0;
  for (const auto& v0 : box) {
    auto rest = best[index(sub(v, v0))];
    if (rest == kUnset) continue;
    auto margin = lead - (dot(w, v0) + p_value(q, v0) + rest);
    if (!worst_v0 || margin < res.margin) {
      res.margin = margin;
      worst_v0 = v0;
    }
  }
  res.flat = res.margin >= 0;
  if (!res.flat) {
    Decomposition d{*worst_v0, {}};
    IntVector u = sub(v, *worst_v0);
    while (height(u) > 0) {
      const auto& r = roots[choice[index(u)]].vec;
      d.roots.push_back(r);
      u = sub(u, r);
    }
    res.witness = std::move(d);
  }
  return res;
}

FlatResult cb_flat(const Quiver& q, const IntVector& v, const IntVector& w) {
  return cb_flat(q, v, w, Limits::from_env().max_flat_total);
}

GenericResult is_generic(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& lambda,
                         const RationalVector& theta) {
  q.check_length(v, "v");
  q.check_length(w, "w");
  q.check_length(lambda, "lambda");
  q.check_length(theta, "theta");
  for (auto& r : roots_bounded(q, v)) {
    if (dot(lambda, r.vec) == 0 && dot(theta, r.vec) == 0) return {false, std::move(r)};
  }
  return {true, std::nullopt};
}

}  // namespace qvc
