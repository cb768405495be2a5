#include <doctest.h>

#include <algorithm>
#include <random>

#include "kmq/errors.hpp"
#include "kmq/kostant.hpp"
#include "kmq/weyl.hpp"

using namespace kmq;

namespace {

mpz_class binomial(Int n, Int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Counts colored multisets of positive roots summing to beta, weighted by q^size.
void enumerate_partitions(const std::vector<RootEntry>& roots, std::size_t j, std::vector<Int> rest, Int size,
                          mpz_class weight, std::vector<mpz_class>& acc) {
  if (std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; })) {
    if (acc.size() <= static_cast<std::size_t>(size)) acc.resize(size + 1);
    acc[size] += weight;
    return;
  }
  if (j == roots.size()) return;
  const auto& a = roots[j];
  for (Int n = 0;; ++n) {
    enumerate_partitions(roots, j + 1, rest, size + n, weight * binomial(n + a.multiplicity - 1, n), acc);
    bool ok = true;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      rest[i] -= a.coords[i];
      ok &= rest[i] >= 0;
    }
    if (!ok) break;
  }
}

QPolynomial brute_kostant(const CartanData& d, const std::vector<Int>& coords) {
  std::vector<mpz_class> acc;
  enumerate_partitions(positive_roots_up_to(d, d.affine() ? coords[0] : 0), 0, coords, 0, 1, acc);
  return QPolynomial(acc);
}

AffineWeight W(Int level, std::vector<Int> fin, Int energy) { return AffineWeight(level, std::move(fin), energy); }

}  // namespace

TEST_CASE("partition function examples") {
  auto a1 = build_affine_data("A1", false);
  CHECK(kostant_partition(a1, a1.zero(), 0) == QPolynomial{1});
  CHECK(kostant_partition(a1, a1.delta(), 1) == QPolynomial{0, 1, 1});
  CHECK(kostant_partition(a1, 2 * a1.delta(), 2) == QPolynomial{0, 1, 3, 1, 1});
  CHECK(kostant_partition(a1, a1.simple_root(1) - a1.simple_root(0), 3).is_zero());
  CHECK_THROWS_AS(kostant_partition(a1, 2 * a1.delta(), 1), DepthExceeded);
  CHECK_THROWS_AS(kostant_partition(a1, a1.fundamental_weight(0), 1), InvalidInput);

  auto sl2 = build_finite_data("A1");
  CHECK(kostant_partition(sl2, sl2.simple_root(1), 0) == QPolynomial{0, 1});
  auto sl3 = build_finite_data("A2");
  CHECK(kostant_partition(sl3, sl3.simple_root(1) + sl3.simple_root(2), 0) == QPolynomial{0, 1, 1});

  auto a2 = build_affine_data("A2", false);
  CHECK(kostant_partition(a2, a2.delta(), 1) == QPolynomial{0, 2, 3, 1});
}

TEST_CASE("partition series agrees with direct enumeration") {
  for (auto [sym, dual] : std::vector<std::pair<const char*, bool>>{{"A1", false}, {"A2", false}, {"B2", true}, {"B2", false}, {"G2", true}}) {
    auto d = build_affine_data(sym, dual);
    CAPTURE(d.label());
    auto s = partition_series(d, 2);
    for (const auto& [c, k] : s.terms()) {
      Int h = 0;
      for (Int x : c) h += x;
      if (h > 7) continue;
      CHECK(k == brute_kostant(d, c));
    }
  }
  for (auto sym : {"A2", "B2", "G2", "A3"}) {
    auto d = build_finite_data(sym);
    auto s = partition_series(d, 2);
    for (const auto& [c, k] : s.terms()) CHECK(k == brute_kostant(d, c));
  }
}

TEST_CASE("partition series is independent of the root order") {
  auto d = build_affine_data("A2", false);
  std::vector<Int> box{2, 3, 2};
  auto reference = partition_series(d, box);
  auto roots = positive_roots_up_to(d, 2);
  std::mt19937 rng(5);
  for (int t = 0; t < 4; ++t) {
    std::shuffle(roots.begin(), roots.end(), rng);
    WeightQSeries s(d, box);
    for (const auto& r : roots) s.multiply_root(r.coords, r.multiplicity);
    CHECK(s.terms() == reference.terms());
  }
}

TEST_CASE("q-multiplicity examples") {
  auto sl2 = build_finite_data("A1");
  CHECK(q_multiplicity(sl2, W(0, {2}, 0), W(0, {0}, 0), 0) == QPolynomial{0, 1});
  CHECK(q_multiplicity(sl2, W(0, {4}, 0), W(0, {4}, 0), 0) == QPolynomial{1});
  CHECK(q_multiplicity(sl2, W(0, {4}, 0), W(0, {1}, 0), 0).is_zero());

  auto a1 = build_affine_data("A1", false);
  auto L0 = a1.fundamental_weight(0);
  CHECK(q_multiplicity(a1, L0, L0, 0) == QPolynomial{1});
  CHECK(q_multiplicity(a1, L0, L0 - a1.delta(), 1) == QPolynomial{0, 0, 1});
  CHECK_THROWS_AS(q_multiplicity(a1, L0, L0 - a1.delta(), 0), DepthExceeded);
  CHECK_THROWS_AS(q_multiplicity(a1, L0, W(1, {-1}, 0), 2), InvalidInput);
  CHECK_THROWS_AS(q_multiplicity(a1, W(1, {2}, 0), L0, 2), InvalidInput);
  CHECK_NOTHROW(q_multiplicity(a1, L0, W(1, {2}, -1), 2, true));

  auto a2 = build_affine_data("A2", false);
  auto M0 = a2.fundamental_weight(0);
  CHECK(q_multiplicity(a2, M0, M0 - a2.delta(), 1) == QPolynomial{0, 0, 1, 1});

  auto sl3 = build_finite_data("A2");
  CHECK(q_multiplicity(sl3, W(0, {1, 1}, 0), W(0, {0, 0}, 0), 0) == QPolynomial{0, 1, 1});
}

TEST_CASE("q-multiplicity is truncation stable and shift invariant") {
  auto a1 = build_affine_data("A1", false);
  AffineWeight lambda(2, {2}, 0);
  for (Int n = 0; n <= 2; ++n) {
    AffineWeight mu(2, {0}, -n - 1);
    auto base = q_multiplicity(a1, lambda, mu, n + 1);
    CHECK(q_multiplicity(a1, lambda, mu, n + 3) == base);
    CHECK(q_multiplicity(a1, lambda + 5 * a1.delta(), mu + 5 * a1.delta(), n + 1) == base);
    CHECK(q_multiplicity(a1, lambda - 2 * a1.delta(), mu - 2 * a1.delta(), n + 1) == base);
  }
}
