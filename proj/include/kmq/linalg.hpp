#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace kmq {

using Rational = mpq_class;

// a / b in lowest terms with a positive denominator.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);

std::size_t rank(RationalMatrix m);

// Grows a basis of a subspace of Q^n one offered vector at a time.  A vector
// that is independent of the accepted ones becomes the next basis element;
// a dependent one is returned as its coordinates in the accepted basis.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t ambient_dim) : n_(ambient_dim) {}

  std::optional<std::vector<Rational>> offer(std::vector<Rational> v);
  std::size_t size() const { return pivots_.size(); }
  std::size_t ambient_dim() const { return n_; }

 private:
  struct Pivot {
    std::size_t col;
    std::vector<Rational> row;
    std::vector<Rational> expr;  // row = sum_k expr[k] * basis_k
  };
  std::size_t n_;
  std::vector<Pivot> pivots_;
};

}  // namespace kmq
