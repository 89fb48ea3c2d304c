#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qvcount/errors.hpp"
#include "qvcount/fock.hpp"
#include "qvcount/hw_module.hpp"
#include "qvcount/integral.hpp"
#include "support.hpp"

using namespace qvc;
using namespace qvc::testing;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

RationalVector random_lambda(std::mt19937& rng, std::size_t n, int den_max) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, den_max);
  RationalVector l(n);
  for (auto& x : l) x = frac(num(rng), den(rng));
  return l;
}

std::int64_t count_of(const Quiver& q, const IntVector& v, const IntVector& w, const RationalVector& l) {
  auto c = predicted_count(q, v, w, l);
  REQUIRE(c.count);
  return *c.count;
}

}  // namespace

TEST_CASE("integral roots") {
  auto pt = builtin_quiver("vertex");
  CHECK(integral_roots(pt, rv({Rational(1, 2)}), iv({2})).positive_roots.empty());
  auto d = integral_roots(pt, rv({Rational(2)}), iv({2}));
  CHECK(d.positive_roots == std::vector<IntVector>{iv({1})});
  CHECK(d.simple_system == std::vector<IntVector>{iv({1})});
  auto c2 = integral_roots(builtin_quiver("cyclic:2"), rv({Rational(1, 2), Rational(1, 2)}), iv({3, 3}));
  CHECK(c2.positive_roots.empty());
  auto a2 = integral_roots(builtin_quiver("a2"), rv({Rational(1, 2), Rational(1, 2)}), iv({1, 1}));
  CHECK(a2.positive_roots == std::vector<IntVector>{iv({1, 1})});
  auto all = integral_roots(builtin_quiver("a3"), rv({Rational(0), Rational(1), Rational(-2)}), iv({1, 1, 1}));
  CHECK(all.positive_roots.size() == 6);
  CHECK(all.simple_system == std::vector<IntVector>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
}

TEST_CASE("submodule extremes") {
  for (const auto& [q, w] : std::vector<std::pair<Quiver, IntVector>>{{builtin_quiver("a2"), iv({1, 1})},
                                                                     {builtin_quiver("a3"), iv({1, 0, 1})},
                                                                     {builtin_quiver("vertex"), iv({3})}}) {
    auto m = build_hw_module(q, w);
    auto full = integral_roots(q, RationalVector(q.size(), 0), m.window());
    for (const auto& v : m.weights()) {
      CHECK(a_submodule_dim(m, v, std::vector<IntVector>{}) == (is_extremal(q, v, w) ? 1u : 0u));
      CHECK(a_submodule_dim(m, v, full) == m.dim_at(v));
    }
  }
  auto adj = build_hw_module(builtin_quiver("a2"), iv({1, 1}));
  auto half = integral_roots(builtin_quiver("a2"), rv({Rational(1, 2), Rational(1, 2)}), adj.window());
  CHECK(a_submodule_dim(adj, iv({1, 1}), half) == 1);
}

TEST_CASE("submodule dimension is monotone in the generators and order free") {
  std::mt19937 rng(8);
  auto q = builtin_quiver("a3");
  auto m = build_hw_module(q, iv({1, 1, 1}));
  auto roots = roots_bounded(q, iv({1, 1, 1}));
  for (int t = 0; t < 25; ++t) {
    std::vector<IntVector> small, big;
    for (const auto& r : roots) {
      bool in_small = rng() % 3 == 0;
      if (in_small) small.push_back(r.vec);
      if (in_small || rng() % 2) big.push_back(r.vec);
    }
    for (const auto& v : m.weights()) {
      auto a = a_submodule_dim(m, v, small);
      CHECK(a <= a_submodule_dim(m, v, big));
      for (std::uint64_t seed : {1u, 2u, 99u}) CHECK(a_submodule_dim(m, v, small, seed) == a);
    }
  }
}

TEST_CASE("simple system generates the same closure") {
  std::mt19937 rng(12);
  for (const auto& [q, w] : std::vector<std::pair<Quiver, IntVector>>{{builtin_quiver("a3"), iv({1, 0, 1})},
                                                                     {builtin_quiver("d4"), iv({0, 1, 0, 0})}}) {
    auto m = build_hw_module(q, w);
    for (int t = 0; t < 10; ++t) {
      auto lam = random_lambda(rng, q.size(), 2);
      auto data = integral_roots(q, lam, m.window());
      for (const auto& v : m.weights()) {
        CHECK(a_submodule_dim(m, v, data.simple_system) == a_submodule_dim(m, v, data.positive_roots));
      }
    }
  }
}

TEST_CASE("predicted count examples") {
  auto a2 = builtin_quiver("a2");
  auto c = predicted_count(a2, iv({1, 1}), iv({1, 1}), rv({Rational(0), Rational(0)}));
  CHECK(c.count == 2);
  CHECK(c.status == CountStatus::proven_finite_type);
  CHECK(to_string(c.status) == "proven-finite-type");
  CHECK(count_of(a2, iv({1, 1}), iv({1, 1}), rv({Rational(1, 2), Rational(1, 2)})) == 1);

  auto loop = Quiver(2, {{0, 1}, {1, 1}});
  auto lc = predicted_count(loop, iv({0, 1}), iv({1, 0}), rv({Rational(0), Rational(0)}));
  CHECK(lc.count == 0);
  CHECK(lc.status == CountStatus::known_answer);
  auto j = builtin_quiver("jordan");
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t r = -7; r <= 7; ++r) {
      if (std::gcd(r, n) != 1 || n == 1) continue;
      CHECK(count_of(j, iv({n}), iv({1}), rv({frac(r, n)})) == 1);
    }
  }
  auto two = Quiver(1, {{0, 0}, {0, 0}});
  CHECK(predicted_count(two, iv({1}), iv({1}), rv({Rational(0)})).count == 0);
  auto ind = Quiver(2, {{0, 1}, {0, 1}, {0, 1}});
  auto nc = predicted_count(ind, iv({1, 1}), iv({1, 0}), rv({Rational(0), Rational(0)}));
  CHECK_FALSE(nc.count);
  CHECK(nc.status == CountStatus::not_computable);
  CHECK_FALSE(predicted_count(Quiver(2, {}), iv({1, 0}), iv({1, 0}), rv({Rational(0), Rational(0)})).count);
  CHECK_THROWS_AS(predicted_count(a2, iv({1}), iv({1, 1}), rv({Rational(0), Rational(0)})), DimensionError);
}

TEST_CASE("bounds and boundary cases on finite type") {
  std::mt19937 rng(13);
  for (const auto& q : {builtin_quiver("vertex"), builtin_quiver("a2"), builtin_quiver("a3")}) {
    for (int t = 0; t < 6; ++t) {
      IntVector w(q.size());
      for (auto& x : w) x = rng() % 2;
      w[0] = 1;
      auto lam = random_lambda(rng, q.size(), 3);
      for (const auto& v : box_vectors(IntVector(q.size(), 2))) {
        auto c = count_of(q, v, w, lam);
        auto mult = freudenthal_mult(q, w, v);
        CHECK(c >= 0);
        CHECK(c <= mult);
        if (is_extremal(q, v, w)) CHECK(c == 1);
        // integral shifts do not matter
        RationalVector shifted = lam;
        for (auto& x : shifted) x += static_cast<long>(rng() % 5) - 2;
        CHECK(count_of(q, v, w, shifted) == c);
        CHECK(count_of(q, v, w, RationalVector(q.size(), 0)) == mult);
        RationalVector generic(q.size());
        for (std::size_t k = 0; k < q.size(); ++k) generic[k] = frac(1, 101 + 2 * static_cast<std::int64_t>(k));
        if (integral_roots(q, generic, IntVector(q.size(), 4)).positive_roots.empty())
          CHECK(count_of(q, v, w, generic) == (is_extremal(q, v, w) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("LMN invariance") {
  std::mt19937 rng(14);
  for (const auto& q : {builtin_quiver("a2"), builtin_quiver("a3")}) {
    for (int t = 0; t < 20; ++t) {
      IntVector w(q.size()), v(q.size());
      for (auto& x : w) x = rng() % 2;
      w[q.size() - 1] = 1;
      for (auto& x : v) x = rng() % 3;
      auto lam = random_lambda(rng, q.size(), 2);
      auto c = count_of(q, v, w, lam);
      for (std::size_t k = 0; k < q.size(); ++k) {
        auto sv = reflect_dim(q, k, v, w);
        if (!is_nonnegative(sv)) continue;
        CHECK(count_of(q, sv, w, reflect_param(q, k, lam, v, w)) == c);
      }
    }
  }
}

TEST_CASE("cyclic quivers go through the Fock model") {
  auto c2 = builtin_quiver("cyclic:2");
  auto r = predicted_count(c2, iv({1, 1}), iv({1, 0}), rv({Rational(0), Rational(0)}));
  REQUIRE(r.count);
  CHECK(*r.count == freudenthal_mult(c2, iv({1, 0}), iv({1, 1})));
  CHECK(r.status == CountStatus::proven_etingof_case);
  CHECK(r.slack);
  auto ext = predicted_count(c2, iv({1, 0}), iv({1, 0}), rv({Rational(1, 3), Rational(1, 5)}));
  CHECK(ext.count == 1);
  CHECK(ext.status == CountStatus::conjectural);
  // generic parameter: only extremal weights survive
  auto gen = predicted_count(c2, iv({1, 1}), iv({1, 0}), rv({Rational(1, 7), Rational(1, 11)}));
  CHECK(gen.count == 0);
  // integral shifts do not matter here either
  for (const auto& lam : {rv({Rational(1, 2), Rational(0)}), rv({Rational(1, 3), Rational(-1, 3)})}) {
    RationalVector shifted{lam[0] + 1, lam[1] - 2};
    CHECK(predicted_count(c2, iv({2, 2}), iv({1, 0}), lam).count ==
          predicted_count(c2, iv({2, 2}), iv({1, 0}), shifted).count);
  }
}

TEST_CASE("Grassmannian kernel predictor") {
  auto a = grassmannian_singular_count(1, 2, Rational(-1));
  CHECK(a.exponent == 1);
  CHECK(a.count == 0);
  CHECK(grassmannian_singular_count(2, 2, Rational(-1)).count == 0);
  for (std::int64_t w = 2; w <= 4; ++w) {
    for (std::int64_t l = 1 - w; l <= -1; ++l) {
      CHECK(grassmannian_singular_count(0, w, Rational(static_cast<long>(l))).count == 1);
      for (std::int64_t v = 1; v <= w; ++v) CHECK(grassmannian_singular_count(v, w, Rational(static_cast<long>(l))).count == 0);
    }
  }
  CHECK_THROWS_AS(grassmannian_singular_count(1, 2, Rational(0)), DomainError);
  CHECK_THROWS_AS(grassmannian_singular_count(1, 2, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(grassmannian_singular_count(3, 2, Rational(-1)), DomainError);
}
