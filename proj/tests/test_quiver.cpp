#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "qvcount/errors.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/weights.hpp"

using namespace qvc;

namespace {

Quiver two_loops() { return Quiver(1, {{0, 0}, {0, 0}}); }
Quiver kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }
Quiver a2_loop() { return Quiver(2, {{0, 1}, {0, 0}}); }
Quiver triple() { return Quiver(2, {{0, 1}, {1, 0}, {0, 1}}); }

IntVector iv(std::initializer_list<std::int64_t> xs) { return IntVector(xs); }

// Roots of finite and affine simply laced quivers by the quadratic form alone:
// positive alpha is real iff (alpha, alpha) = 2, imaginary iff it is a positive multiple of delta.
std::vector<Root> quadratic_roots(const Quiver& q, const IntVector& bound) {
  auto cls = classify_quiver(q);
  std::vector<Root> out;
  for (const auto& a : box_vectors(bound)) {
    if (height(a) == 0) continue;
    auto n = tits_form(q, a, a);
    if (n == 2) {
      out.push_back({a, RootKind::real});
    } else if (n == 0 && cls.delta) {
      const auto& d = *cls.delta;
      std::int64_t k = a[0] / d[0];
      if (scale(k, d) == a) out.push_back({a, RootKind::imaginary});
    }
  }
  return out;
}

std::set<IntVector> vectors_of(const std::vector<Root>& rs) {
  std::set<IntVector> s;
  for (const auto& r : rs) s.insert(r.vec);
  return s;
}

// Exhaustive flatness: every multiset of roots with sum <= v, the rest being v^0.
std::pair<bool, std::int64_t> flat_oracle(const Quiver& q, const IntVector& v, const IntVector& w) {
  auto roots = roots_bounded(q, v);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::int64_t top = p_value(q, v) + dot(w, v);
  std::function<void(std::size_t, IntVector, std::int64_t)> rec = [&](std::size_t from, IntVector used,
                                                                      std::int64_t psum) {
    IntVector v0 = sub(v, used);
    best = std::min(best, top - (dot(w, v0) + p_value(q, v0) + psum));
    for (std::size_t k = from; k < roots.size(); ++k) {
      IntVector next = add(used, roots[k].vec);
      if (!leq(next, v)) continue;
      rec(k, next, psum + p_value(q, roots[k].vec));
    }
  };
  rec(0, IntVector(v.size(), 0), 0);
  return {best >= 0, best};
}

}  // namespace

TEST_CASE("tits form examples") {
  auto a2 = builtin_quiver("a2");
  CHECK(tits_form(a2, iv({1, 0}), iv({0, 1})) == -1);
  auto j = builtin_quiver("jordan");
  for (int n = 0; n < 5; ++n) CHECK(tits_form(j, iv({n}), iv({n})) == 0);
  auto pt = builtin_quiver("vertex");
  for (int v = 0; v < 5; ++v) CHECK(tits_form(pt, iv({v}), iv({v})) == 2 * v * v);
}

TEST_CASE("p examples") {
  CHECK(p_value(builtin_quiver("vertex"), iv({1})) == 0);
  for (int n = 1; n < 5; ++n) CHECK(p_value(builtin_quiver("jordan"), iv({n})) == 1);
  CHECK(p_value(builtin_quiver("cyclic:2"), iv({1, 1})) == 1);
}

TEST_CASE("classification") {
  CHECK(classify_quiver(builtin_quiver("a2")).type == QuiverType::finite);
  CHECK(classify_quiver(builtin_quiver("a3")).type == QuiverType::finite);
  CHECK(classify_quiver(builtin_quiver("d4")).type == QuiverType::finite);
  auto c3 = classify_quiver(builtin_quiver("cyclic:3"));
  CHECK(c3.type == QuiverType::affine);
  REQUIRE(c3.delta);
  CHECK(*c3.delta == iv({1, 1, 1}));
  CHECK(classify_quiver(builtin_quiver("jordan")).type == QuiverType::affine);
  CHECK(classify_quiver(two_loops()).type == QuiverType::indefinite);
  CHECK(classify_quiver(kronecker()).type == QuiverType::affine);
  CHECK(classify_quiver(triple()).type == QuiverType::indefinite);
  // affine D4 tilde: delta = (2,1,1,1,1) with the centre first
  auto d4t = classify_quiver(Quiver(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  CHECK(d4t.type == QuiverType::affine);
  CHECK(*d4t.delta == iv({2, 1, 1, 1, 1}));
  CHECK_THROWS_AS(classify_quiver(Quiver(2, {})), UnsupportedError);
}

TEST_CASE("roots examples") {
  auto a2 = roots_bounded(builtin_quiver("a2"), iv({1, 1}));
  REQUIRE(a2.size() == 3);
  for (const auto& r : a2) CHECK(r.is_real());
  CHECK(vectors_of(a2) == std::set<IntVector>{iv({1, 0}), iv({0, 1}), iv({1, 1})});

  auto c2 = roots_bounded(builtin_quiver("cyclic:2"), iv({2, 2}));
  std::set<IntVector> real, imag;
  for (const auto& r : c2) (r.is_real() ? real : imag).insert(r.vec);
  CHECK(real == std::set<IntVector>{iv({1, 0}), iv({0, 1}), iv({2, 1}), iv({1, 2})});
  CHECK(imag == std::set<IntVector>{iv({1, 1}), iv({2, 2})});

  auto pt = roots_bounded(builtin_quiver("vertex"), iv({3}));
  REQUIRE(pt.size() == 1);
  CHECK(pt[0].vec == iv({1}));
}

TEST_CASE("roots agree with the quadratic form oracle") {
  std::vector<std::pair<Quiver, IntVector>> cases = {
      {builtin_quiver("a2"), iv({3, 3})},       {builtin_quiver("a3"), iv({2, 2, 2})},
      {builtin_quiver("d4"), iv({3, 2, 2, 2})}, {builtin_quiver("cyclic:2"), iv({4, 4})},
      {builtin_quiver("cyclic:3"), iv({3, 3, 3})}, {kronecker(), iv({4, 4})},
      {Quiver(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), iv({3, 2, 2, 2, 2})},
  };
  for (const auto& [q, bound] : cases) {
    auto got = roots_bounded(q, bound);
    auto want = quadratic_roots(q, bound);
    std::sort(want.begin(), want.end(), [](const Root& a, const Root& b) {
      return std::make_pair(height(a.vec), a.vec) < std::make_pair(height(b.vec), b.vec);
    });
    CHECK(got == want);
  }
}

TEST_CASE("loop quivers: every multiple of a loop vertex is imaginary") {
  for (const auto& q : {builtin_quiver("jordan"), two_loops()}) {
    auto rs = roots_bounded(q, iv({4}));
    REQUIRE(rs.size() == 4);
    for (const auto& r : rs) CHECK(r.kind == RootKind::imaginary);
  }
}

TEST_CASE("tits form is symmetric, bilinear and orientation free") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<Quiver> qs = {builtin_quiver("a3"), builtin_quiver("d4"), builtin_quiver("cyclic:3"), triple(),
                            a2_loop()};
  for (const auto& q : qs) {
    for (int trial = 0; trial < 30; ++trial) {
      IntVector x(q.size()), y(q.size()), z(q.size());
      for (auto* vec : {&x, &y, &z})
        for (auto& c : *vec) c = coord(rng);
      CHECK(tits_form(q, x, y) == tits_form(q, y, x));
      CHECK(tits_form(q, add(x, z), y) == tits_form(q, x, y) + tits_form(q, z, y));
      CHECK(tits_form(q, scale(3, x), y) == 3 * tits_form(q, x, y));
      // flip a random subset of arrows
      std::vector<Arrow> arrows = q.arrows();
      for (auto& a : arrows)
        if (rng() % 2) std::swap(a.first, a.second);
      Quiver flipped(q.size(), arrows);
      CHECK(tits_form(flipped, x, y) == tits_form(q, x, y));
      CHECK(tits_form(q.reversed(), x, y) == tits_form(q, x, y));
    }
  }
}

TEST_CASE("tits form is Weyl invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (const auto& q : {builtin_quiver("a3"), builtin_quiver("cyclic:3"), triple(), kronecker()}) {
    for (int trial = 0; trial < 30; ++trial) {
      IntVector a(q.size()), b(q.size());
      for (auto& c : a) c = coord(rng);
      for (auto& c : b) c = coord(rng);
      for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(tits_form(q, reflect_root(q, i, a), reflect_root(q, i, b)) == tits_form(q, a, b));
      }
    }
  }
}

TEST_CASE("roots are closed under reflections inside the bound and p is consistent") {
  std::vector<std::pair<Quiver, IntVector>> cases = {
      {builtin_quiver("a3"), iv({2, 2, 2})}, {builtin_quiver("cyclic:3"), iv({3, 3, 3})}, {triple(), iv({4, 4})},
      {a2_loop(), iv({3, 3})},              {kronecker(), iv({3, 3})}};
  for (const auto& [q, bound] : cases) {
    auto rs = roots_bounded(q, bound);
    auto set = vectors_of(rs);
    CHECK(set.size() == rs.size());
    for (const auto& r : rs) {
      CHECK(p_value(q, r.vec) >= 0);
      CHECK((p_value(q, r.vec) == 0) == r.is_real());
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q.loops(i)) continue;
        auto s = reflect_root(q, i, r.vec);
        if (s == r.vec || !is_nonnegative(s) || height(s) == 0 || !leq(s, bound)) continue;
        CHECK(set.count(s) == 1);
      }
    }
  }
}

TEST_CASE("flatness examples") {
  auto pt = builtin_quiver("vertex");
  CHECK(cb_flat(pt, iv({1}), iv({2})).flat);
  auto bad = cb_flat(pt, iv({2}), iv({1}));
  CHECK_FALSE(bad.flat);
  REQUIRE(bad.witness);
  CHECK(bad.witness->v0 == iv({0}));
  CHECK(bad.witness->roots == std::vector<IntVector>{iv({1}), iv({1})});
  CHECK(flatness_margin(pt, iv({2}), iv({1}), *bad.witness) == bad.margin);
  CHECK(cb_flat(builtin_quiver("cyclic:2"), iv({1, 1}), iv({1, 0})).flat);
  CHECK_THROWS_AS(cb_flat(pt, iv({13}), iv({1})), ResourceError);
}

TEST_CASE("flatness agrees with exhaustive enumeration on rank two") {
  std::vector<Quiver> qs = {builtin_quiver("a2"), builtin_quiver("cyclic:2"), kronecker(), triple(), a2_loop()};
  for (const auto& q : qs) {
    for (const auto& v : box_vectors(iv({3, 3}))) {
      for (const auto& w : box_vectors(iv({2, 2}))) {
        auto got = cb_flat(q, v, w);
        auto [flat, margin] = flat_oracle(q, v, w);
        CHECK(got.flat == flat);
        CHECK(got.margin == margin);
        if (!got.flat) {
          REQUIRE(got.witness);
          IntVector total = got.witness->v0;
          for (const auto& r : got.witness->roots) total = add(total, r);
          CHECK(total == v);
          CHECK(flatness_margin(q, v, w, *got.witness) == margin);
        }
        CHECK(cb_flat(q.reversed(), v, w).flat == got.flat);
      }
    }
  }
}

TEST_CASE("genericity") {
  auto pt = builtin_quiver("vertex");
  CHECK(is_generic(pt, iv({1}), iv({2}), {Rational(0)}, {Rational(1)}).generic);
  auto g = is_generic(pt, iv({1}), iv({2}), {Rational(0)}, {Rational(0)});
  CHECK_FALSE(g.generic);
  REQUIRE(g.witness);
  CHECK(g.witness->vec == iv({1}));
  auto c = is_generic(builtin_quiver("cyclic:2"), iv({1, 1}), iv({1, 0}), {Rational(1, 3), Rational(-1, 3)},
                      {Rational(0), Rational(0)});
  CHECK_FALSE(c.generic);
  REQUIRE(c.witness);
  CHECK(c.witness->vec == iv({1, 1}));
}

TEST_CASE("quiver files and builtins") {
  auto q = parse_quiver_text("vertices: 3\narrows: [[0,1],\n  [1,2], [2,2]]\n");
  CHECK(q.size() == 3);
  CHECK(q.loops(2) == 1);
  CHECK(q.edges(0, 1) == 1);
  auto again = parse_quiver_text(quiver_to_text(q));
  CHECK(again.arrows() == q.arrows());
  auto js = parse_quiver_text(R"({"vertices": 2, "arrows": [[0, 1], [1, 0]]})");
  CHECK(classify_quiver(js).type == QuiverType::affine);
  CHECK(builtin_quiver("a1").size() == 1);
  CHECK(builtin_quiver("cyclic:4").size() == 4);
  CHECK_THROWS_AS(builtin_quiver("e9"), ParseError);
  CHECK_THROWS_AS(parse_quiver_text("vertices: 2\narrows: [[0,5]]"), Error);
  CHECK_THROWS_AS(load_quiver("/no/such/file"), Error);
  CHECK(q.cartan(2, 2) == 0);
  CHECK(q.cartan(0, 1) == -1);
}
