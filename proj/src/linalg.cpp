#include "kmq/linalg.hpp"

#include <cassert>
#include <utility>

namespace kmq {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  assert(a.cols() == b.rows());
  RationalMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  RationalMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> IncrementalBasis::offer(std::vector<Rational> v) {
  assert(v.size() == n_);
  std::vector<Rational> coeffs(pivots_.size());
  for (const Pivot& p : pivots_) {
    if (v[p.col] == 0) continue;
    Rational f = v[p.col] / p.row[p.col];
    for (std::size_t j = 0; j < n_; ++j)
      if (p.row[j] != 0) v[j] -= f * p.row[j];
    for (std::size_t k = 0; k < p.expr.size(); ++k)
      if (p.expr[k] != 0) coeffs[k] += f * p.expr[k];
  }
  std::size_t lead = 0;
  while (lead < n_ && v[lead] == 0) ++lead;
  if (lead == n_) return coeffs;

  Pivot np{lead, std::move(v), {}};
  np.expr.resize(pivots_.size() + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) np.expr[k] = -coeffs[k];
  np.expr.back() = 1;
  // Each row is reduced against all earlier pivots, so insertion order is the
  // elimination order.
  pivots_.push_back(std::move(np));
  return std::nullopt;
}

}  // namespace kmq
