#pragma once

#include <vector>

#include "kmq/root_system.hpp"

namespace kmq {

// A word s_{word[0]} s_{word[1]} ... in simple reflections.  Words produced
// by this module are reduced, so length() is the Coxeter length.
struct WeylElement {
  std::vector<int> word;

  Int length() const { return static_cast<Int>(word.size()); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

// s_i(x) = x - <x, coroot_i> alpha_i.  Throws InvalidInput for a bad index.
AffineWeight reflect(const CartanData& data, int i, const AffineWeight& x);
AffineWeight apply(const CartanData& data, const WeylElement& w, const AffineWeight& x);
// w.x = w(x + rho) - rho
AffineWeight dot_action(const CartanData& data, const WeylElement& w, const AffineWeight& x);
bool is_dominant(const CartanData& data, const AffineWeight& x);
// Words that act identically on rho (a faithful test at positive level).
bool same_element(const CartanData& data, const WeylElement& v, const WeylElement& w);

struct LevelReduction {
  std::vector<Int> weight;  // the representative in the fundamental alcove
  int sign = 1;             // (-1)^length of an element realizing it
  bool singular = false;    // dot variant only: the shifted weight lies on a wall
  WeylElement element;      // the realizing element, as a reduced word
};

// Representative of the level-k orbit of the finite weight lambda_bar under
// the affine Weyl group of `data` (W semidirect kQ for untwisted data).  With
// dot = true the orbit is taken under the shifted action
// x -> w(x + rho) - rho at level k, i.e. the plain action at level k + h^vee.
LevelReduction to_level_k_dominant(const CartanData& data, const std::vector<Int>& lambda_bar, Int k,
                                   bool dot = false);

// Reduces x to the dominant chamber by simple reflections.  Requires positive
// level for affine data.
LevelReduction to_dominant(const CartanData& data, const AffineWeight& x);

struct Contribution {
  WeylElement w;
  AffineWeight beta;  // w.lambda - mu
};

// All w with w.lambda - mu in the positive cone and delta-coefficient at most
// depth, sorted by (length, word).  For affine data the common level of
// lambda and mu must be positive.
std::vector<Contribution> enumerate_contributing(const CartanData& data, const AffineWeight& lambda,
                                                 const AffineWeight& mu, Int depth);

// <x, rho_check> for finite data: half the sum of <x, beta_check> over positive roots.
Rational rho_check_pairing(const CartanData& data, const AffineWeight& x);

// Dominant weights of level k and energy 0 (affine data), in lexicographic
// order of their Dynkin labels.
std::vector<AffineWeight> dominant_weights_of_level(const CartanData& data, Int k);

// Dominant weights x of finite data with <x, rho_check> <= bound, in
// lexicographic order of their Dynkin labels.
std::vector<AffineWeight> dominant_weights_up_to(const CartanData& data, const Rational& bound);

}  // namespace kmq
