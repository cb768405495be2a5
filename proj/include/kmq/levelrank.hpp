#pragma once

#include <map>
#include <vector>

#include "kmq/linalg.hpp"
#include "kmq/root_system.hpp"

namespace kmq {

// Generalized Young diagram: mu_1 >= ... >= mu_N, mu_1 - mu_N <= k, sum 0.
bool is_diagram(const std::vector<Int>& mu, Int k);
// All diagrams of length N and spread at most k, in lexicographically decreasing order.
std::vector<std::vector<Int>> all_diagrams(int N, Int k);

// w_i = number of entries congruent to i mod k, i = 1..k (class k is 0).
std::vector<Int> psi(int N, Int k, const std::vector<Int>& mu);
// The diagram nu of length k with nu_i - nu_{i+1} = w_i, spread <= N and sum 0.
// Throws Inconsistent when sum w != N or sum_{i<k} i w_i is not divisible by k.
std::vector<Int> transpose(const std::vector<Int>& w, int N, Int k);
// The diagram mu of length N with psi(N, k, mu) = w.  Throws Inconsistent.
std::vector<Int> psi_inverse(const std::vector<Int>& w, int N, Int k);
// Sum of negative entries.
Int energy_of_highest(const std::vector<Int>& mu);
// sum mu_i^2
Int diagram_norm(const std::vector<Int>& mu);
// Dynkin labels mu_i - mu_{i+1} of the SL(N) weight.
std::vector<Int> diagram_labels(const std::vector<Int>& mu);

// A gl(k)_aff weight (level, coordinates in the basis E_1..E_k, energy).
struct GlWeight {
  Int level = 0;
  std::vector<Int> x;
  Int energy = 0;
  friend bool operator==(const GlWeight&, const GlWeight&) = default;
};
GlWeight gl_fundamental(Int k, Int i);    // omega_i = (1, E_1 + ... + E_i, 0), i = 1..k
GlWeight gl_simple_root(Int k, Int i);    // alpha_i, with alpha_k = alpha_0 = (0, E_k - E_1, 1)
// sum w_i omega_i - sum v_i alpha_i
GlWeight gl_shifted_weight(const std::vector<Int>& v, const std::vector<Int>& w);
// Labels w'_i = x_i - x_{i+1} (i < k), w'_k = level - (x_1 - x_k).
std::vector<Int> gl_labels(const GlWeight& g);
bool gl_dominant(const GlWeight& g);
// Image in sl(k)_aff (level, labels w'_1..w'_{k-1}, energy).
AffineWeight gl_to_sl(const GlWeight& g);

struct NakajimaLift {
  std::vector<Int> lambda_bar;  // diagram of length N
  std::vector<Int> mu_bar;
  AffineWeight lambda;          // (k, labels, 0)
  AffineWeight mu;              // (k, labels, energy)
  Int a = 0;                    // sum v_i
  std::vector<Int> w_shifted;   // w'
};
// Throws Inconsistent for invalid w, a non-dominant shifted weight, or a
// non-integral energy.
NakajimaLift nakajima_lifts(const std::vector<Int>& v, const std::vector<Int>& w, int N, Int k);

// <rho_check of SL(k), omega_{b mod k}>, computed from the coordinates.
Rational rho_pairing_fundamental(Int b, Int k);
// <rho_check of SL(k), nu> for nu in E-coordinates.
Rational rho_pairing(const std::vector<Int>& nu, Int k);

struct NakajCheck {
  Rational lhs;  // v_k + neg(lambda_bar) - neg(mu_bar)
  Rational rhs;  // (a + |mu_bar|^2/2 - |lambda_bar|^2/2) / k
  bool identity = false;
  bool closing_lambda = false;   // <rho, ^t lambda> = -|lambda|^2/2 - k neg(lambda)
  bool closing_mu = false;
  bool fundamental_terms = false;  // (bk - b^2)/2 resp. (-bk - b^2)/2 for each entry b
  bool reduction = true;           // when v_k = 0: a = <rho, ^t mu - ^t lambda>
  bool ok() const { return identity && closing_lambda && closing_mu && fundamental_terms && reduction; }
};
NakajCheck check_nakaj_identity(const std::vector<Int>& lambda_bar, const std::vector<Int>& mu_bar,
                                const std::vector<Int>& v, int N, Int k);

// 2|lambda - mu|: twice the height of lambda - mu in simple-root coordinates,
// i.e. <2 rho_check, lambda_bar - mu_bar> + 2 h (l - m) for simply laced data.
// Throws InvalidInput unless lambda >= mu at a common positive level.
Int dimension_formula(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu);

// Decomposition of L(factors[0]) (x) L(factors[1]) (x) ..., multiplied left to
// right, into irreducibles with delta-coefficient at most depth below the top.
std::map<AffineWeight, Int> tensor_decomposition(const CartanData& data, const std::vector<AffineWeight>& factors,
                                                 Int depth);

// Multiplicity of L(nu) in the tensor product of the gl(k)_aff fundamental
// modules L(omega_{order[0]}) (x) L(omega_{order[1]}) (x) ...  The Heisenberg
// part contributes a (F-1)-coloured partition count for F factors.
Int gl_tensor_multiplicity(Int k, const GlWeight& nu, const std::vector<Int>& order, Int depth);
// The same with the factors omega_i^{w_i} in ascending i.
Int gl_tensor_multiplicity(Int k, const GlWeight& nu, const std::vector<Int>& w);

struct DualityRow {
  std::vector<Int> v, w;
  bool skipped = false;  // shifted weight not dominant
  NakajimaLift lift;
  Int lhs = 0;  // tensor multiplicity over gl(k)_aff
  Int rhs = 0;  // dim L(lambda)_mu over sl(N)_aff
  bool nakaj = false;
  bool equal() const { return skipped || (lhs == rhs && nakaj); }
};
DualityRow duality_row(const std::vector<Int>& v, const std::vector<Int>& w, int N, Int k);
// All valid w and all v with sum v <= bound.
std::vector<DualityRow> duality_sweep(int N, Int k, Int bound);

}  // namespace kmq
