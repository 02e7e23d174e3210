#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "sqsum/numbers.hpp"

namespace sqsum {

/// Dense univariate polynomial with exact integer coefficients, kept in
/// canonical form (no trailing zero coefficients). coeff(i) is the
/// coefficient of k^i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  IntPolynomial(std::initializer_list<Int> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }
  /// c * k^deg
  static IntPolynomial monomial(Int c, int deg);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of k^i (zero past the degree).
  const Int& coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Int& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Int> coeffs_;
};

}  // namespace sqsum
