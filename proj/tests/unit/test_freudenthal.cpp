#include <doctest.h>

#include <sstream>

#include "kmq/errors.hpp"
#include "kmq/freudenthal.hpp"
#include "kmq/kostant.hpp"
#include "kmq/weyl.hpp"

using namespace kmq;

namespace {

AffineWeight W(Int level, std::vector<Int> fin, Int energy) { return AffineWeight(level, std::move(fin), energy); }

// Number of r-colored partitions of n.
Int colored_partitions(Int r, Int n) {
  std::vector<Int> p(n + 1, 0);
  p[0] = 1;
  for (Int part = 1; part <= n; ++part)
    for (Int c = 0; c < r; ++c)
      for (Int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

// Weyl dimension formula for sl3 highest weight (a, b).
Int sl3_dim(Int a, Int b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

}  // namespace

TEST_CASE("multiplicity examples") {
  auto a1 = build_affine_data("A1", false);
  auto L0 = a1.fundamental_weight(0);
  CHECK(weight_multiplicity(a1, L0, L0, 0) == 1);
  CHECK(weight_multiplicity(a1, L0, L0 - 4 * a1.delta(), 4) == 5);
  CHECK(weight_multiplicity(a1, L0, L0 + a1.delta(), 4) == 0);
  CHECK(weight_multiplicity(a1, L0, W(1, {1}, 0), 4) == 0);
  CHECK_THROWS_AS(weight_multiplicity(a1, L0, L0 - 4 * a1.delta(), 3), DepthExceeded);

  auto sl3 = build_finite_data("A2");
  CHECK(weight_multiplicity(sl3, W(0, {1, 1}, 0), W(0, {0, 0}, 0), 0) == 2);
  CHECK(weight_multiplicity(sl3, W(0, {2, 2}, 0), W(0, {0, 0}, 0), 0) == 3);
}

TEST_CASE("finite dimensions add up") {
  auto sl3 = build_finite_data("A2");
  for (Int a = 0; a <= 3; ++a)
    for (Int b = 0; b <= 3; ++b) {
      MultiplicityTable t(sl3, W(0, {a, b}, 0), 0);
      Int total = 0;
      for (const auto& [mu, m] : t.all_weights()) total += m;
      CHECK(total == sl3_dim(a, b));
    }
  auto g2 = build_finite_data("G2");
  MultiplicityTable t(g2, W(0, {1, 0}, 0), 0);
  Int total = 0;
  for (const auto& [mu, m] : t.all_weights()) total += m;
  CHECK(total == 7);
  MultiplicityTable adj(g2, W(0, {0, 1}, 0), 0);
  CHECK(adj.multiplicity(W(0, {0, 0}, 0)) == 2);
}

TEST_CASE("basic level-1 strings are colored partition counts") {
  for (auto sym : {"A1", "A2", "A3"}) {
    auto d = build_affine_data(sym, false);
    auto L0 = d.fundamental_weight(0);
    auto s = string_q_character(d, L0, L0, 6);
    for (Int n = 0; n <= 6; ++n) CHECK(s.coefficient(n) == colored_partitions(d.rank(), n));
  }
  auto a1 = build_affine_data("A1", false);
  CHECK(string_q_character(a1, a1.fundamental_weight(0), a1.fundamental_weight(0), 4) == QPolynomial{1, 1, 2, 3, 5});
  auto a2 = build_affine_data("A2", false);
  CHECK(string_q_character(a2, a2.fundamental_weight(0), a2.fundamental_weight(0), 2) == QPolynomial{1, 2, 5});
}

TEST_CASE("multiplicities are Weyl invariant") {
  for (auto [sym, dual] : std::vector<std::pair<const char*, bool>>{{"A1", false}, {"A2", false}, {"B2", true}, {"G2", false}}) {
    auto d = build_affine_data(sym, dual);
    AffineWeight lambda = d.fundamental_weight(0) + d.fundamental_weight(d.rank());
    MultiplicityTable t(d, lambda, 3);
    for (const auto& [mu, m] : t.all_weights()) {
      auto c = *d.root_coordinates(lambda - mu);
      if (c[0] > 1) continue;
      for (int i : d.nodes()) {
        auto nu = reflect(d, i, mu);
        auto cn = *d.root_coordinates(lambda - nu);
        if (cn[0] <= 3) CHECK(t.multiplicity(nu) == m);
      }
    }
  }
}

TEST_CASE("maximal lifts") {
  auto a1 = build_affine_data("A1", false);
  AffineWeight lambda(2, {0}, 0);
  CHECK(maximal_lift(a1, lambda, {0}, 3) == lambda);
  CHECK(maximal_lift(a1, lambda, {2}, 3) == W(2, {2}, -1));
  auto a2 = build_affine_data("A2", false);
  AffineWeight l2(3, {2, 0}, 4);
  CHECK(maximal_lift(a2, l2, {0, 1}, 3) == W(3, {0, 1}, 4));
  CHECK_THROWS_AS(maximal_lift(a1, lambda, {1}, 3), InvalidInput);
  CHECK_THROWS_AS(maximal_lift(a1, lambda, {2}, 0), DepthExceeded);
}

TEST_CASE("Freudenthal agrees with the q-analog at q = 1") {
  for (auto [sym, dual] : std::vector<std::pair<const char*, bool>>{{"A1", false}, {"A2", false}, {"B2", true}, {"B2", false}}) {
    auto d = build_affine_data(sym, dual);
    for (Int k = 1; k <= 2; ++k) {
      AffineWeight lambda = k * d.fundamental_weight(0);
      MultiplicityTable t(d, lambda, 2);
      for (const auto& mu : t.dominant_weights()) {
        CAPTURE(to_string(mu));
        CHECK(q_multiplicity(d, lambda, mu, 2).at_one() == t.multiplicity(mu));
      }
    }
  }
}

TEST_CASE("csv export") {
  auto sl2 = build_finite_data("A1");
  MultiplicityTable t(sl2, W(0, {2}, 0), 0);
  std::ostringstream os;
  write_multiplicity_csv(os, t);
  CHECK(os.str() == "level,f1,energy,multiplicity\n0,2,0,1\n0,0,0,1\n0,-2,0,1\n");
}
