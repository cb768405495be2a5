#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kmq/linalg.hpp"
#include "kmq/qpoly.hpp"
#include "kmq/root_system.hpp"

namespace kmq {

struct WeightSpace {
  AffineWeight weight;
  std::vector<Int> gap;  // simple-root coordinates of lambda - weight
  // Basis vector k is f_{w[0]} f_{w[1]} ... v_lambda for w = basis_words[k].
  std::vector<std::vector<int>> basis_words;
  // e[j] : this space -> weight + alpha_j, f[j] : this space -> weight - alpha_j,
  // indexed by node offset (node - first_node).  Empty when the target is
  // zero or outside the slice.
  std::vector<std::optional<RationalMatrix>> e;
  std::vector<std::optional<RationalMatrix>> f;

  std::size_t dim() const { return basis_words.size(); }
};

// The weight spaces of L(lambda) with delta-coefficient of lambda - mu at most
// depth (every weight space for finite data), with exact matrices of the
// Chevalley generators between neighbouring spaces.
class ModuleSlice {
 public:
  const CartanData& data() const { return data_; }
  const AffineWeight& highest_weight() const { return lambda_; }
  Int depth() const { return depth_; }
  // Ordered by (height of lambda - mu, mu).
  const std::vector<WeightSpace>& spaces() const { return spaces_; }
  const WeightSpace* find(const AffineWeight& mu) const;
  // dim L(lambda)_mu; 0 off the support.  Throws DepthExceeded for a weight
  // in the cone below the slice depth.
  std::size_t dim(const AffineWeight& mu) const;
  bool within_depth(const AffineWeight& mu) const;
  std::size_t total_dimension() const;

 private:
  friend ModuleSlice construct_slice(const CartanData&, const AffineWeight&, Int, std::size_t);
  CartanData data_;
  AffineWeight lambda_;
  Int depth_ = 0;
  std::vector<WeightSpace> spaces_;
  std::map<AffineWeight, std::size_t> index_;
};

// Dimension ceiling for a single weight space: $KMQ_MAX_DIM, default 200.
std::size_t default_max_dim();

// Throws ResourceLimit when some weight space would exceed max_dim.
ModuleSlice construct_slice(const CartanData& data, const AffineWeight& lambda, Int depth,
                            std::size_t max_dim = default_max_dim());

// dim ker e^p on L(lambda)_mu for p = 0, 1, ... until it reaches dim L(lambda)_mu.
std::vector<std::size_t> kernel_dimensions(const ModuleSlice& slice, const AffineWeight& mu);

// sum_i dim(F^{i+1} / F^i) q^i with F^i = ker e^i on L(lambda)_mu and e = sum_i e_i.
QPolynomial principal_filtration(const ModuleSlice& slice, const AffineWeight& mu);

// Compares the filtration polynomial at (k, lambda_bar, energy), (k, mu_bar,
// energy) in the affine module with the one of the finite module L(lambda_bar).
bool principal_vs_finite(const CartanData& affine_data, const std::vector<Int>& lambda_bar,
                         const std::vector<Int>& mu_bar, Int k, Int energy = 0);

// Rank of the contravariant form on the Verma module M(lambda) at weight mu,
// from the Gram matrix of all f-words.  Throws ResourceLimit past max_words.
std::size_t shapovalov_rank(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu,
                            std::size_t max_words = 3000);

}  // namespace kmq
