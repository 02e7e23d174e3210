#pragma once

#include <utility>
#include <variant>

#include "sqsum/arith.hpp"
#include "sqsum/numbers.hpp"

namespace sqsum {

/// Inclusive interval [lo, hi] of integers.
struct Interval {
  Int lo, hi;
  Int length() const { return hi - lo + 1; }
};

/// Canonical parameters of the interval equation
///
///   (n-m)^2 + ... + (n+k)^2 = (n+k+j+1)^2 + ... + (n+2k+j)^2
///
/// i.e. two disjoint intervals of k+m+1 and k integers at distance j+1,
/// with j >= 0, m >= 0, k > 0.
struct CaseParams {
  Int j, m, k;
  void validate() const {
    if (j < 0 || m < 0 || k < 1)
      throw std::domain_error("CaseParams: need j >= 0, m >= 0, k > 0");
  }
};

/// The quadratic a n^2 + b n + c = 0 equivalent to the interval equation.
/// All three coefficients are exact integers (the /6 in the constant term
/// always divides out).
struct QuadraticForm {
  Int a, b, c;
  Int disc() const { return b * b - 4 * a * c; }
};

struct NegativeDisc {
  Int disc;
};
struct IrrationalDisc {
  Int disc;
};
struct RationalRoots {
  Rat lo, hi;  // lo <= hi; equal when double_root
  Int sqrt_disc;
  bool double_root;
};
/// Exact root outcome of the quadratic for one (j,m,k).
using RootStatus = std::variant<NegativeDisc, IrrationalDisc, RationalRoots>;

struct Canonical {
  CaseParams params;
  Int n;
};
struct Symmetric {};   // equal-length disjoint intervals (the m = -1 case)
struct Degenerate {};  // identical or nested inputs; no canonical form exists
using NormalizedCase = std::variant<Canonical, Symmetric, Degenerate>;

/// Reduces an arbitrary pair of intervals to canonical shape: deletes any
/// overlap from both sides, negates both intervals when the lower one is the
/// shorter, then reads (j,m,k,n) off the endpoints. Equal-length disjoint
/// intervals come back Symmetric; identical or nested inputs Degenerate.
NormalizedCase normalize(const Interval& left, const Interval& right);

/// The quadratic in n for canonical parameters:
///   (m+1) n^2 - [2k(j+k) + m(m+1)] n - [k(j+k)(j+2k+1) - m(m+1)(2m+1)/6]
QuadraticForm quadratic_of(const CaseParams& p);

/// D(j,m,k) = 4k(j(k+m+1)(j+2k+m+1) + k(k+m+1)^2) - m(m+1)^2(m+2)/3,
/// computed independently of quadratic_of (the two must agree).
Int discriminant(const CaseParams& p);

/// Exact roots of the quadratic, classified by the discriminant.
RootStatus roots(const CaseParams& p);

/// The two sides (L, R) of the folded form of the interval equation:
///   L = (n-m)^2 + ... + n^2, via one of two closed forms picked by m > n,
///   R = k(j+k)(j+2k+2n+1).
/// L == R exactly when n solves the interval equation for (j,m,k).
std::pair<Int, Int> side_sums(const CaseParams& p, const Int& n);

struct VerifyResult {
  bool equal;
  Int left_sum, right_sum;  // equal => both are the common value
};

/// Direct check by literal interval summation, independent of the quadratic
/// machinery.
VerifyResult verify_solution(const CaseParams& p, const Int& n);

/// The j = m = 0 identity family: for every k >= 1,
///   [k(2k+1)]^2 + ... + [2k(k+1)]^2 = [2k(k+1)+1]^2 + ... + [k(2k+3)]^2
/// with common value k(k+1)(2k+1)(12k^2+12k+1)/6, plus the companion root
/// n'' = -k.
struct DostorIdentity {
  Int n_prime, n_second;
  Int common_sum;   // by literal summation at n'
  Int closed_form;  // k(k+1)(2k+1)(12k^2+12k+1)/6; must equal common_sum
};
DostorIdentity dostor(const Int& k);

}  // namespace sqsum
