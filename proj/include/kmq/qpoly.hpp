#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace kmq {

// Polynomial in q with arbitrary-precision integer coefficients, stored densely
// in ascending degree with no trailing zeros (the zero polynomial is empty).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpz_class> coefficients);
  QPolynomial(std::initializer_list<long> coefficients);

  static QPolynomial constant(long c);
  static QPolynomial monomial(const mpz_class& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the top term; 0 for constants and for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(std::size_t degree) const;
  mpz_class at_one() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  // Adds c * q^shift * o.
  void add_scaled(const QPolynomial& o, const mpz_class& c, std::size_t shift);
  QPolynomial shifted(std::size_t n) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Canonical human form, e.g. "1 + 2q - q^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

QPolynomial operator+(QPolynomial a, const QPolynomial& b);
QPolynomial operator-(QPolynomial a, const QPolynomial& b);
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

}  // namespace kmq
