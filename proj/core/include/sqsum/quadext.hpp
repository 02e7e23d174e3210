#pragma once

#include <ostream>

#include "sqsum/numbers.hpp"

namespace sqsum {

/// Element a + b*sqrt(2) of Q(sqrt(2)), with exact rational components.
/// Carrier for the closed forms built from (1 +- sqrt(2)) and (3 +- 2*sqrt(2)).
struct QuadExt {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(2)

  QuadExt() : a(0), b(0) {}
  QuadExt(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}
  QuadExt(const Int& ia, const Int& ib) : a(ia), b(ib) {}

  QuadExt conjugate() const { return QuadExt(a, -b); }
  bool is_rational() const { return b == 0; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r   with r^2 = 2
    return QuadExt(Rat(x.a * y.a + 2 * x.b * y.b), Rat(x.a * y.b + x.b * y.a));
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << x.a << (x.b < 0 ? "" : "+") << x.b << "*sqrt(2)";
  }
};

/// Exact e-th power; qext_pow(x, 0) == 1.
QuadExt qext_pow(const QuadExt& x, unsigned long e);

/// Extracts a plain integer from x, throwing std::logic_error if x has a
/// sqrt(2) component or a non-integer rational part. `what` names the caller
/// in the error message.
Int qext_to_int(const QuadExt& x, const char* what);

}  // namespace sqsum
