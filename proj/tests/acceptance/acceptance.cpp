// Acceptance suite: one PASS/FAIL line per criterion, followed by any
// counterexamples.  Exit status is nonzero if a criterion fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kmq/brylinski.hpp"
#include "kmq/errors.hpp"
#include "kmq/freudenthal.hpp"
#include "kmq/kostant.hpp"
#include "kmq/levelrank.hpp"
#include "kmq/weyl.hpp"

using namespace kmq;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> counterexamples;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      counterexamples.push_back(what);
    }
  }
};

// Every slice built by the suite, for the Shapovalov check of criterion 8.
std::deque<ModuleSlice> g_slices;

const ModuleSlice& remember(ModuleSlice slice) {
  g_slices.push_back(std::move(slice));
  return g_slices.back();
}

std::string row(const CartanData& d, const AffineWeight& lambda, const AffineWeight& mu, const std::string& rest) {
  return d.label() + " lambda = " + to_string(lambda) + " mu = " + to_string(mu) + ": " + rest;
}

// Number of r-coloured partitions of n, by the recursion over the largest part.
Int coloured_partitions(int r, int n) {
  std::vector<std::vector<Int>> p(n + 1, std::vector<Int>(n + 1, 0));
  // p[m][j]: r-coloured partitions of m with parts <= j.
  std::function<Int(int, int)> count = [&](int m, int j) -> Int {
    if (m == 0) return 1;
    if (j == 0) return 0;
    if (p[m][j]) return p[m][j] - 1;
    Int total = 0;
    // Choose how many parts of size j, in r colours: multisets of size c from r colours.
    for (int c = 0; c * j <= m; ++c) {
      Int multisets = 1;
      for (int t = 1; t <= c; ++t) multisets = multisets * (r + t - 1) / t;
      total += multisets * count(m - c * j, j - 1);
    }
    p[m][j] = total + 1;
    return total;
  };
  return count(n, n);
}

Outcome criterion1() {
  Outcome o;
  for (const char* sym : {"A1", "A2"}) {
    CartanData d = build_finite_data(sym);
    for (const auto& lambda : dominant_weights_up_to(d, 4)) {
      const auto& slice = remember(construct_slice(d, lambda, 0));
      for (const auto& mu : MultiplicityTable(d, lambda, 0).dominant_weights()) {
        auto ec = principal_filtration(slice, mu);
        auto c = q_multiplicity(d, lambda, mu, 0);
        o.expect(ec == c, row(d, lambda, mu, "eC = " + ec.to_string() + ", C = " + c.to_string()));
      }
    }
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* sym : {"A1", "A2"}) {
    CartanData d = build_affine_data(sym, false);
    for (Int k = 1; k <= 2; ++k)
      for (const auto& lambda : dominant_weights_of_level(d, k)) {
        MultiplicityTable table(d, lambda, 4);
        for (const auto& mu : table.dominant_weights()) {
          auto c = q_multiplicity(d, lambda, mu, 4);
          const Int m = table.multiplicity(mu);
          o.expect(c.at_one() == m, row(d, lambda, mu,
                                        "C(1) = " + c.at_one().get_str() + ", Freudenthal " + std::to_string(m)));
        }
      }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const char* sym : {"A1", "A2"}) {
    CartanData d = build_affine_data(sym, false);
    const AffineWeight L0 = d.fundamental_weight(0);
    MultiplicityTable table(d, L0, 6);
    for (int n = 0; n <= 6; ++n) {
      const Int m = table.multiplicity(L0 - n * d.delta());
      const Int p = coloured_partitions(d.rank(), n);
      o.expect(m == p, d.label() + " n = " + std::to_string(n) + ": multiplicity " + std::to_string(m) +
                           ", coloured partitions " + std::to_string(p));
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  CartanData d = build_affine_data("A1", false);
  for (auto [k, depth] : {std::pair<Int, Int>{1, 3}, {2, 2}})
    for (const auto& lambda : dominant_weights_of_level(d, k)) {
      const auto& slice = remember(construct_slice(d, lambda, depth));
      for (const auto& mu : MultiplicityTable(d, lambda, depth).dominant_weights()) {
        auto ec = principal_filtration(slice, mu);
        auto c = q_multiplicity(d, lambda, mu, depth);
        o.expect(ec == c, row(d, lambda, mu, "eC = " + ec.to_string() + ", C = " + c.to_string()));
      }
    }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const char* sym : {"A1", "A2"}) {
    CartanData aff = build_affine_data(sym, false);
    CartanData fin = aff.finite_part();
    const AffineWeight theta = positive_roots_up_to(fin, 0).back().root;
    for (const auto& lb : dominant_weights_up_to(fin, 3)) {
      const auto& fin_slice = remember(construct_slice(fin, lb, 0));
      for (const auto& mb : MultiplicityTable(fin, lb, 0).dominant_weights()) {
        const Rational gap = (fin.form(lb, lb) - fin.form(mb, mb)) / 2;
        const Rational theta_pair = 2 * fin.form(lb, theta) / fin.form(theta, theta);
        mpz_class gap_floor, pair_ceil;
        mpz_fdiv_q(gap_floor.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
        mpz_cdiv_q(pair_ceil.get_mpz_t(), theta_pair.get_num_mpz_t(), theta_pair.get_den_mpz_t());
        const Int k = std::max<Int>({gap_floor.get_si() + 1, pair_ceil.get_si(), 1});
        for (Int kk : {k, k + 1}) {
          AffineWeight lambda(kk, lb.finite, 0), mu(kk, mb.finite, 0);
          const auto& slice = remember(construct_slice(aff, lambda, 0));
          const Int am = weight_multiplicity(aff, lambda, mu, 0);
          const Int fm = weight_multiplicity(fin, lb, mb, 0);
          auto aec = principal_filtration(slice, mu);
          auto fec = principal_filtration(fin_slice, mb);
          o.expect(am == fm && aec == fec,
                   row(aff, lambda, mu,
                       "affine " + std::to_string(am) + " / " + aec.to_string() + ", finite " + std::to_string(fm) +
                           " / " + fec.to_string()));
        }
      }
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t used = 0;
  for (const auto& r : duality_sweep(2, 2, 2)) {
    if (r.skipped) continue;
    ++used;
    std::ostringstream os;
    os << "v = (" << r.v[0] << "," << r.v[1] << ") w = (" << r.w[0] << "," << r.w[1] << "): tensor " << r.lhs
       << ", Freudenthal " << r.rhs << ", identity " << (r.nakaj ? "ok" : "fails");
    o.expect(r.lhs == r.rhs && r.nakaj, os.str());
  }
  o.expect(used > 0, "no dominant (v, w) rows");
  return o;
}

std::string show(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Outcome criterion7() {
  Outcome o;
  for (int N = 2; N <= 4; ++N)
    for (Int k = 2; k <= 4; ++k) {
      CartanData sl = build_affine_data('A', N - 1, false);
      CartanData fin = sl.finite_part();
      for (const auto& mu_bar : all_diagrams(N, k)) {
        bool bounded = true;
        for (Int x : mu_bar) bounded = bounded && x >= -4 && x <= 4;
        if (!bounded) continue;
        for (Int b : mu_bar) {
          Rational expect = b >= 0 ? ratio(b * k - b * b, 2) : ratio(-b * k - b * b, 2);
          o.expect(rho_pairing_fundamental(b, k) == expect,
                   "rho_check pairing of the fundamental weight " + std::to_string(b) + " at k = " + std::to_string(k));
        }
        const auto w = psi(N, k, mu_bar);
        std::vector<Int> v(k, 0);
        for (;;) {
          if (gl_dominant(gl_shifted_weight(v, w))) {
            auto lift = nakajima_lifts(v, w, N, k);
            auto chk = check_nakaj_identity(lift.lambda_bar, lift.mu_bar, v, N, k);
            o.expect(chk.ok(), "N = " + std::to_string(N) + " k = " + std::to_string(k) + " v = " + show(v) +
                                   " w = " + show(w) + ": identity check fails");
            const Int dim = dimension_formula(sl, lift.lambda, lift.mu);
            const AffineWeight diff = lift.lambda - lift.mu;
            const Rational expansion = 2 * rho_check_pairing(fin, AffineWeight(0, diff.finite, 0)) +
                                       2 * sl.dual_coxeter() * diff.energy;
            o.expect(dim % 2 == 0 && (dim == 0) == (lift.lambda == lift.mu) && expansion == dim,
                     "dimension formula at " + to_string(lift.lambda) + ", " + to_string(lift.mu) + ": " +
                         std::to_string(dim));
          }
          Int i = 0;
          while (i < k && v[i] == 2) v[i++] = 0;
          if (i == k) break;
          ++v[i];
        }
      }
      // dimension_formula on every dominant pair of the level-k modules, two steps deep.
      for (const auto& lambda : dominant_weights_of_level(sl, k))
        for (const auto& mu : MultiplicityTable(sl, lambda, 2).dominant_weights()) {
          const Int dim = dimension_formula(sl, lambda, mu);
          const AffineWeight diff = lambda - mu;
          const Rational expansion = 2 * rho_check_pairing(fin, AffineWeight(0, diff.finite, 0)) +
                                     2 * sl.dual_coxeter() * diff.energy;
          o.expect(dim % 2 == 0 && (dim == 0) == (lambda == mu) && expansion == dim,
                   row(sl, lambda, mu, "dimension formula " + std::to_string(dim)));
        }
    }
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Null vectors on both sides of every supported generalized Cartan matrix.
  std::vector<std::string> types;
  for (int r = 1; r <= 8; ++r) types.push_back("A" + std::to_string(r));
  for (int r = 2; r <= 8; ++r) types.push_back("B" + std::to_string(r));
  for (int r = 2; r <= 8; ++r) types.push_back("C" + std::to_string(r));
  for (int r = 4; r <= 8; ++r) types.push_back("D" + std::to_string(r));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) types.push_back(s);
  for (const auto& t : types)
    for (bool dual : {false, true}) {
      CartanData d = build_affine_data(t, dual);
      bool ok = true;
      for (int i : d.nodes()) {
        Int row_sum = 0, col_sum = 0;
        for (int j : d.nodes()) {
          row_sum += d.cartan(i, j) * d.mark(j);
          col_sum += d.comark(j) * d.cartan(j, i);
        }
        ok = ok && row_sum == 0 && col_sum == 0;
      }
      o.expect(ok, d.label() + ": marks or comarks are not null vectors");
    }

  // Truncation stability of q_multiplicity.
  for (const char* sym : {"A1", "A2"}) {
    CartanData d = build_affine_data(sym, false);
    for (Int k = 1; k <= 2; ++k)
      for (const auto& lambda : dominant_weights_of_level(d, k))
        for (const auto& mu : MultiplicityTable(d, lambda, 2).dominant_weights()) {
          auto base = q_multiplicity(d, lambda, mu, 2);
          for (Int extra = 1; extra <= 2; ++extra) {
            auto deeper = q_multiplicity(d, lambda, mu, 2 + extra);
            o.expect(base == deeper, row(d, lambda, mu, "C changes with depth: " + base.to_string() + " vs " +
                                                            deeper.to_string()));
          }
        }
  }

  // Shapovalov quotient dimensions against the slices and Freudenthal.
  for (const auto& slice : g_slices) {
    MultiplicityTable table(slice.data(), slice.highest_weight(), slice.depth());
    for (const auto& space : slice.spaces()) {
      const std::size_t rank = shapovalov_rank(slice.data(), slice.highest_weight(), space.weight);
      const Int m = table.multiplicity(space.weight);
      o.expect(rank == space.dim() && static_cast<Int>(rank) == m,
               row(slice.data(), slice.highest_weight(), space.weight,
                   "Shapovalov " + std::to_string(rank) + ", slice " + std::to_string(space.dim()) + ", Freudenthal " +
                       std::to_string(m)));
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "finite principal filtration equals C(q) for sl2 and sl3", criterion1},
      {2, "C(1) equals Freudenthal multiplicities for A1^(1) and A2^(1), levels 1 and 2", criterion2},
      {3, "level-1 strings of L(Lambda_0) equal coloured partition counts", criterion3},
      {4, "affine principal filtration equals C(q) for A1^(1)", criterion4},
      {5, "large-level stabilization of multiplicities and filtrations", criterion5},
      {6, "level-rank dimension equality for N = k = 2", criterion6},
      {7, "diagram identities and the dimension formula", criterion7},
      {8, "structural invariants", criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << o.checks
              << " checks, " << o.counterexamples.size() << " counterexamples, " << timing << ")\n";
    if (!error.empty()) std::cout << "  error: " << error << "\n";
    for (const auto& ce : o.counterexamples) std::cout << "  counterexample: " << ce << "\n";
    if (!o.pass) ++failed;
  }
  if (failed == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failed << (failed == 1 ? " criterion" : " criteria") << " failed\n";
  return failed ? 1 : 0;
}
