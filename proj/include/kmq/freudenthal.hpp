#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "kmq/qpoly.hpp"
#include "kmq/root_system.hpp"

namespace kmq {

// Weight multiplicities of the integrable module L(lambda) down to
// delta-coefficient `depth` below lambda, by Freudenthal's recursion.
// Values are memoized on dominant weights.
class MultiplicityTable {
 public:
  MultiplicityTable(CartanData data, AffineWeight lambda, Int depth);

  const CartanData& data() const { return data_; }
  const AffineWeight& highest_weight() const { return lambda_; }
  Int depth() const { return depth_; }

  // dim L(lambda)_mu.  Zero off lambda - Q+; DepthExceeded when lambda - mu
  // is in the cone with delta-coefficient above depth.
  Int multiplicity(const AffineWeight& mu);

  // Dominant weights mu <= lambda with delta-coefficient of lambda - mu at most depth,
  // sorted by (that coefficient, height of lambda - mu, mu).
  std::vector<AffineWeight> dominant_weights() const;
  // All weights with nonzero multiplicity within the depth, in the same order.
  std::vector<std::pair<AffineWeight, Int>> all_weights();

 private:
  Int dominant_multiplicity(const AffineWeight& mu);
  bool depth_ok(const std::vector<Int>& coords) const;

  CartanData data_;
  AffineWeight lambda_;
  Int depth_;
  std::vector<RootEntry> roots_;
  Rational top_norm_;  // |lambda + rho|^2
  std::map<AffineWeight, Int> memo_;
};

Int weight_multiplicity(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu, Int depth);

// sum_{n=0..depth} dim L(lambda)_{mu_top - n delta} q^n
QPolynomial string_q_character(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu_top,
                               Int depth);

// The highest weight (k, mu_bar, e) with nonzero multiplicity, scanning
// e = energy(lambda), energy(lambda) - 1, ... down to energy(lambda) - depth.
// Throws DepthExceeded if none is found.
AffineWeight maximal_lift(const CartanData& data, const AffineWeight& lambda, const std::vector<Int>& mu_bar,
                          Int depth);

// CSV rows "level,f1,...,fr,energy,multiplicity" with a header line.
void write_multiplicity_csv(std::ostream& out, MultiplicityTable& table);

}  // namespace kmq
