#include "kmq/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace kmq {

QPolynomial::QPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(long c) { return QPolynomial{c}; }

QPolynomial QPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

mpz_class QPolynomial::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : mpz_class(0);
}

mpz_class QPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  add_scaled(o, 1, 0);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  add_scaled(o, -1, 0);
  return *this;
}

void QPolynomial::add_scaled(const QPolynomial& o, const mpz_class& c, std::size_t shift) {
  if (o.is_zero() || c == 0) return;
  if (coeffs_.size() < o.coeffs_.size() + shift) coeffs_.resize(o.coeffs_.size() + shift);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i + shift] += c * o.coeffs_[i];
  trim();
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

QPolynomial QPolynomial::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(n);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const mpz_class& c = coeffs_[d];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r = a;
  r *= b;
  return r;
}

}  // namespace kmq
