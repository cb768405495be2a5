#pragma once

#include <vector>

#include "kmq/qpoly.hpp"
#include "kmq/root_system.hpp"

namespace kmq {

// Truncation of prod_{alpha > 0} (1 - q e^alpha)^{-mult(alpha)} to the box
// 0 <= coords(beta) <= box (simple-root coordinates, node order).
class WeightQSeries {
 public:
  WeightQSeries(const CartanData& data, std::vector<Int> box);

  const std::vector<Int>& box() const { return box_; }
  bool in_box(const std::vector<Int>& coords) const;
  // Coefficient of e^beta; zero outside the positive cone.  Throws
  // DepthExceeded when beta is in the cone but outside the box.
  const QPolynomial& at(const std::vector<Int>& coords) const;
  // Multiplies by (1 - q e^alpha)^{-mult}.
  void multiply_root(const std::vector<Int>& alpha, Int mult);
  std::size_t cell_count() const { return cells_.size(); }
  // Nonzero terms in lexicographic order of coordinates.
  std::vector<std::pair<std::vector<Int>, QPolynomial>> terms() const;

 private:
  std::size_t index(const std::vector<Int>& coords) const;

  std::vector<Int> box_;
  std::vector<std::size_t> stride_;
  std::vector<QPolynomial> cells_;
};

// The series over all positive roots fitting in the box, multiplied in the
// order of positive_roots_up_to.
WeightQSeries partition_series(const CartanData& data, const std::vector<Int>& box);
// The box depth * marks: every beta <= depth * delta (for finite data,
// beta <= depth * theta).
WeightQSeries partition_series(const CartanData& data, Int depth);

// K_beta(q).  Zero when beta is outside the positive cone; DepthExceeded when
// it is inside with delta-coefficient above depth.
QPolynomial kostant_partition(const CartanData& data, const AffineWeight& beta, Int depth);

// C^lambda_mu(q) = sum_w (-1)^l(w) K_{w.lambda - mu}(q).  mu must be dominant
// unless allow_nondominant is set, in which case the sum is evaluated with no
// claim about its meaning.
QPolynomial q_multiplicity(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu, Int depth,
                           bool allow_nondominant = false);

}  // namespace kmq
