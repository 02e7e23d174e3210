#include "sqsum/polynomial.hpp"

namespace sqsum {

IntPolynomial IntPolynomial::monomial(Int c, int deg) {
  if (deg < 0) throw std::domain_error("monomial: negative degree");
  if (c == 0) return IntPolynomial();
  std::vector<Int> v(static_cast<size_t>(deg) + 1, Int(0));
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::coeff(int i) const {
  static const Int kZero(0);
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Int& c, const IntPolynomial& p) {
  if (c == 0) return IntPolynomial();
  std::vector<Int> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  if (p.is_zero()) return os << "0";
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff(i);
    if (c == 0) continue;
    if (i != p.degree()) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "k";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

}  // namespace sqsum
