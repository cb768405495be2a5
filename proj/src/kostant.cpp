#include "kmq/kostant.hpp"

#include <algorithm>

#include "kmq/errors.hpp"
#include "kmq/weyl.hpp"

namespace kmq {

WeightQSeries::WeightQSeries(const CartanData& data, std::vector<Int> box) : box_(std::move(box)) {
  if (box_.size() != static_cast<std::size_t>(data.node_count())) throw InvalidInput("box has the wrong size");
  std::size_t total = 1;
  stride_.assign(box_.size(), 0);
  for (std::size_t i = box_.size(); i-- > 0;) {
    if (box_[i] < 0) throw InvalidInput("box bounds must be nonnegative");
    stride_[i] = total;
    total *= static_cast<std::size_t>(box_[i] + 1);
  }
  cells_.assign(total, QPolynomial());
  cells_[0] = QPolynomial::constant(1);
}

bool WeightQSeries::in_box(const std::vector<Int>& coords) const {
  for (std::size_t i = 0; i < box_.size(); ++i)
    if (coords[i] < 0 || coords[i] > box_[i]) return false;
  return true;
}

std::size_t WeightQSeries::index(const std::vector<Int>& coords) const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < box_.size(); ++i) k += stride_[i] * static_cast<std::size_t>(coords[i]);
  return k;
}

const QPolynomial& WeightQSeries::at(const std::vector<Int>& coords) const {
  static const QPolynomial zero;
  if (coords.size() != box_.size()) throw InvalidInput("coordinate vector has the wrong size");
  if (std::any_of(coords.begin(), coords.end(), [](Int c) { return c < 0; })) return zero;
  if (!in_box(coords)) throw DepthExceeded("weight lies outside the computed partition box");
  return cells_[index(coords)];
}

void WeightQSeries::multiply_root(const std::vector<Int>& alpha, Int mult) {
  if (!in_box(alpha)) return;
  const std::size_t shift = index(alpha);
  if (shift == 0) throw InvalidInput("zero is not a root");
  const std::size_t n = box_.size();
  for (Int m = 0; m < mult; ++m) {
    // Cells are visited in increasing index, which is lexicographic order, so
    // beta - alpha is already updated when beta is reached.
    std::vector<Int> c(n, 0);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      bool fits = true;
      for (std::size_t i = 0; i < n && fits; ++i) fits = c[i] >= alpha[i];
      if (fits && !cells_[k - shift].is_zero()) cells_[k].add_scaled(cells_[k - shift], 1, 1);
      for (std::size_t i = n; i-- > 0;) {
        if (++c[i] <= box_[i]) break;
        c[i] = 0;
      }
    }
  }
}

std::vector<std::pair<std::vector<Int>, QPolynomial>> WeightQSeries::terms() const {
  std::vector<std::pair<std::vector<Int>, QPolynomial>> out;
  const std::size_t n = box_.size();
  std::vector<Int> c(n, 0);
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (!cells_[k].is_zero()) out.emplace_back(c, cells_[k]);
    for (std::size_t i = n; i-- > 0;) {
      if (++c[i] <= box_[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

WeightQSeries partition_series(const CartanData& data, const std::vector<Int>& box) {
  WeightQSeries s(data, box);
  const Int depth = data.affine() ? box[0] : 0;
  for (const auto& root : positive_roots_up_to(data, depth)) s.multiply_root(root.coords, root.multiplicity);
  return s;
}

WeightQSeries partition_series(const CartanData& data, Int depth) {
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  std::vector<Int> box = data.marks();
  for (auto& b : box) b *= depth;
  return partition_series(data, box);
}

QPolynomial kostant_partition(const CartanData& data, const AffineWeight& beta, Int depth) {
  if (!data.conforms(beta)) throw InvalidInput("weight has the wrong rank");
  if (beta.level != 0) throw InvalidInput("K_beta needs a level-0 argument");
  auto c = data.root_coordinates(beta);
  if (!c || std::any_of(c->begin(), c->end(), [](Int x) { return x < 0; })) return {};
  if (data.affine() && (*c)[0] > depth)
    throw DepthExceeded("delta-coefficient " + std::to_string((*c)[0]) + " exceeds depth " + std::to_string(depth));
  return partition_series(data, *c).at(*c);
}

QPolynomial q_multiplicity(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu, Int depth,
                           bool allow_nondominant) {
  if (!data.conforms(lambda) || !data.conforms(mu)) throw InvalidInput("weight has the wrong rank");
  if (lambda.level != mu.level) throw InvalidInput("lambda and mu must have the same level");
  if (!is_dominant(data, lambda)) throw InvalidInput("lambda must be dominant: " + to_string(lambda));
  if (!allow_nondominant && !is_dominant(data, mu)) throw InvalidInput("mu must be dominant: " + to_string(mu));
  auto top = data.root_coordinates(lambda - mu);
  if (!top || std::any_of(top->begin(), top->end(), [](Int x) { return x < 0; })) return {};
  if (data.affine() && (*top)[0] > depth)
    throw DepthExceeded("delta-coefficient of lambda - mu is " + std::to_string((*top)[0]) + ", above depth " +
                        std::to_string(depth));

  // Every w.lambda - mu is at most lambda - mu, so that box suffices.
  WeightQSeries series = partition_series(data, *top);
  QPolynomial sum;
  for (const auto& c : enumerate_contributing(data, lambda, mu, depth)) {
    const QPolynomial& k = series.at(*data.root_coordinates(c.beta));
    sum.add_scaled(k, c.w.sign(), 0);
  }
  return sum;
}

}  // namespace kmq
