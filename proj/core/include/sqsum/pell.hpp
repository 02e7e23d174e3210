#pragma once

#include <vector>

#include "sqsum/interval.hpp"
#include "sqsum/numbers.hpp"
#include "sqsum/quadext.hpp"

namespace sqsum {

/// One solution of t(t+1) = 2 d^2, equivalently (2t+1)^2 - 2(2d)^2 = 1.
struct PellState {
  Int t, d;
  bool satisfies_invariant() const { return t * (t + 1) == 2 * d * d; }
};

/// The Pell-adjacent sequence 0, 1, 2, 5, 12, 29, 70, ... defined by
/// x_{i+2} = 2 x_{i+1} + x_i.
Int x_at(long i);

/// x_0 .. x_upto as a vector.
std::vector<Int> x_sequence(long upto);

/// Same sequence through the closed form
///   x_i = (sqrt(2)/4) ((1+sqrt(2))^i - (1-sqrt(2))^i),
/// evaluated exactly in Q(sqrt(2)). Throws std::logic_error if the result
/// fails to collapse to an integer.
Int x_explicit(long i);

struct SquareTriangular {
  Int t;  // t(t+1)/2 is a perfect square
  Int d;  // its root: t(t+1)/2 = d^2
};

/// i-th square triangular index: t_i = 2 x_i^2 for even i and
/// (x_{i-1} + x_i)^2 for odd i, with the root d_i checked exact.
SquareTriangular square_triangular(long i);

/// Euler's explicit solution of t(t+1) = 2 d^2:
///   t = ((3+2r)^n + (3-2r)^n)/4 - 1/2,  d = ((3+2r)^n - (3-2r)^n)/(4r)
/// with r = sqrt(2), evaluated exactly and checked integral.
SquareTriangular euler_td(long n);

/// One step of the Pell recursion (t,d) -> (3t+4d+1, 2t+3d+1), which
/// preserves t(t+1) = 2 d^2.
PellState pell_step(const PellState& s);

/// A near-isosceles Pythagorean triple (n, n+1, n+j+2).
struct IsoscelesTriple {
  Int n, j;
  Int hypotenuse() const { return n + j + 2; }
};

/// The i-th triple (1-based: i=1 gives (3,4,5)):
///   n_i = x_{i+1}^2 - x_i^2 (i odd) or 2 x_i x_{i+1} (i even),
///   hypotenuse x_i^2 + x_{i+1}^2.
IsoscelesTriple near_isosceles(long i);

/// Root status of the m=0, k=1 specialization n^2 = 2(j+1)n + (j+1)(j+3),
/// whose discriminant is 8(j+1)(j+2). Integer roots (j+1) +- sqrt(2(j+1)(j+2))
/// exist exactly when j+1 is a square triangular index.
RootStatus k1_roots(const Int& j);

}  // namespace sqsum
