#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmq/linalg.hpp"
#include "kmq/weight.hpp"

namespace kmq {

// A positive root together with its multiplicity.  `coords` are the
// simple-root coordinates indexed by node (node 0 first for affine data).
struct RootEntry {
  AffineWeight root;
  std::vector<Int> coords;
  Int multiplicity = 1;
  bool imaginary = false;
};

// Generalized Cartan matrix and the derived constants of a finite or affine
// Kac-Moody algebra.
//
// Conventions:
//   * cartan(i, j) = <alpha_j, coroot_i>.
//   * Affine nodes are 0..r with 0 the extra node; finite nodes are 1..r.
//   * Weights are AffineWeight values (level, Dynkin labels of the finite
//     part, energy).  alpha_0 has energy 1, so delta = (0, 0, 1) and the
//     delta-coefficient of a level-0 element is its alpha_0 coordinate.
//   * The invariant form is normalized by d_i = comark_i / mark_i on the
//     affine nodes, which gives (Lambda_0, delta) = 1, (delta, delta) = 0 and
//     (Lambda_0, Lambda_0) = 0.  For finite data the shortest simple roots
//     have squared length 2.
//   * For finite data, marks() are the coefficients of the highest root and
//     comarks() those of the highest short coroot.
class CartanData {
 public:
  const std::string& label() const { return label_; }
  // Finite type symbol and rank the data was built from, e.g. "B3".
  const std::string& base_symbol() const { return base_symbol_; }
  int rank() const { return rank_; }
  bool affine() const { return affine_; }
  bool dual() const { return dual_; }
  int twist() const { return twist_; }

  int first_node() const { return affine_ ? 0 : 1; }
  int node_count() const { return affine_ ? rank_ + 1 : rank_; }
  std::vector<int> nodes() const;
  bool valid_node(int i) const { return i >= first_node() && i <= rank_; }

  Int cartan(int i, int j) const { return cartan_[idx(i) * node_count() + idx(j)]; }
  const Rational& symmetrizer(int i) const { return sym_[idx(i)]; }
  Int mark(int i) const { return marks_[idx(i)]; }
  Int comark(int i) const { return comarks_[idx(i)]; }
  const std::vector<Int>& marks() const { return marks_; }
  const std::vector<Int>& comarks() const { return comarks_; }
  Int dual_coxeter() const { return dual_coxeter_; }
  // Multiplicity of n*delta (n >= 1).  Zero for finite data.
  Int imag_mult(Int n) const;
  // imag_mult over one period: entry t is the multiplicity of n*delta for n = t mod twist.
  const std::vector<Int>& imag_mult_table() const { return imag_table_; }

  // <x, coroot_i>
  Int pair(const AffineWeight& x, int i) const;
  AffineWeight zero() const { return AffineWeight(0, std::vector<Int>(rank_, 0), 0); }
  AffineWeight simple_root(int j) const;
  AffineWeight fundamental_weight(int i) const;
  AffineWeight rho() const;
  AffineWeight delta() const;

  // Simple-root coordinates of a level-0 element of the root lattice, or
  // nullopt when the element has nonzero level or is not in the root lattice.
  std::optional<std::vector<Int>> root_coordinates(const AffineWeight& beta) const;
  AffineWeight from_root_coordinates(std::span<const Int> coords) const;
  // True iff beta is a nonnegative integer combination of simple roots.
  bool in_positive_cone(const AffineWeight& beta) const;
  // x <= y in the dominance order (y - x in the positive cone).
  bool dominated_by(const AffineWeight& x, const AffineWeight& y) const {
    return in_positive_cone(y - x);
  }

  Rational form(const AffineWeight& x, const AffineWeight& y) const;

  bool conforms(const AffineWeight& x) const { return x.finite.size() == static_cast<std::size_t>(rank_); }

  // The finite root system spanned by nodes 1..r, with the same form normalization.
  CartanData finite_part() const;

  friend CartanData build_affine_data(char series, int rank, bool dual);
  friend CartanData build_finite_data(char series, int rank);

 private:
  friend CartanData make_finite(std::string, std::string, int, std::vector<Int>, std::vector<Rational>);
  std::size_t idx(int i) const { return static_cast<std::size_t>(i - first_node()); }
  void finish_finite_inverse();

  std::string label_;
  std::string base_symbol_;
  int rank_ = 0;
  bool affine_ = false;
  bool dual_ = false;
  int twist_ = 1;
  std::vector<Int> cartan_;
  std::vector<Rational> sym_;
  std::vector<Int> marks_;
  std::vector<Int> comarks_;
  Int dual_coxeter_ = 0;
  std::vector<Int> imag_table_;
  // Adjugate and determinant of the finite Cartan block (nodes 1..r).
  std::vector<Int> fin_adj_;
  Int fin_det_ = 1;
  // (omega_i, omega_j) on the finite part.
  std::vector<Rational> fin_gram_;
};

// Affine data from a finite type.  dual = false gives the untwisted extension
// X_r^(1); dual = true gives its Langlands dual (the transposed matrix), which
// is twisted when X is not simply laced.  Throws InvalidInput on bad input.
CartanData build_affine_data(char series, int rank, bool dual);
// Accepts symbols such as "A1", "E6", "G2".
CartanData build_affine_data(const std::string& symbol, bool dual);
CartanData build_finite_data(char series, int rank);
CartanData build_finite_data(const std::string& symbol);

// Parses "B3" into ('B', 3).  Throws InvalidInput.
std::pair<char, int> parse_type_symbol(const std::string& symbol);

// Finite Cartan matrix (r x r, row-major) with the cartan(i,j) convention above.
std::vector<Int> finite_cartan_matrix(char series, int rank);

// Positive roots with delta-coefficient at most `depth` (all positive roots
// for finite data), sorted by (delta-coefficient, height, coordinates).
std::vector<RootEntry> positive_roots_up_to(const CartanData& data, Int depth);

Rational bilinear_form(const CartanData& data, const AffineWeight& x, const AffineWeight& y);

// Node permutation of the simply laced algebra whose diagram automorphism
// realizes the dual of X_r^(1) for non-simply-laced X, and its order.
struct DiagramAutomorphism {
  std::string algebra;  // e.g. "A5"
  std::vector<int> permutation;
  int order = 1;
};
DiagramAutomorphism twisting_automorphism(char series, int rank);

// Dimension of the omega^n eigenspace (omega a primitive order-th root of
// unity) of the automorphism acting on the Cartan subalgebra, for n = 0..order-1.
std::vector<Int> eigenspace_dimensions(const DiagramAutomorphism& sigma);

}  // namespace kmq
