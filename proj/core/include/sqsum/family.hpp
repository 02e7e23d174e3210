#pragma once

#include <vector>

#include "sqsum/polynomial.hpp"

namespace sqsum {

enum class Parity { Even, Odd };

/// The polynomial triple (A_i, B_i, C_i) realizing one family of perfect
/// square quadratic pairs:
///   even i = 2l:    k A^2 + 1 = (k+1) B^2 = C,   deg A = deg B = l
///   odd  i = 2l+1:  k(k+1) A^2 + 1 = B^2 = C,    deg A = l, deg B = l+1
/// All coefficients are strictly positive integers, and
/// j_i(k) = C_i(k) - k - 1 makes Pi(k, j_i(k)) a perfect square for every k.
struct FamilyTriple {
  Parity parity;
  long ell;
  IntPolynomial A, B, C;
  long index() const {
    return parity == Parity::Even ? 2 * ell : 2 * ell + 1;
  }
};

/// Triple for i = 2*ell (ell >= 1), built from the closed coefficient
/// formulas. Throws std::logic_error if any coefficient fails to come out a
/// positive integer.
FamilyTriple even_family(long ell);

/// Triple for i = 2*ell + 1 (ell >= 0).
FamilyTriple odd_family(long ell);

/// Checks the defining identity of the triple by exact polynomial
/// multiplication and comparison.
bool verify_family(const FamilyTriple& f);

/// j_i(k) = C_i(k) - k - 1, as a polynomial (i >= 1).
IntPolynomial j_poly(long i);
Int j_value(long i, const Int& k);

/// S_i = k(k+1) A_i B_i, whose square is Pi(k, j_i(k)) identically.
IntPolynomial pi_sqrt(long i);

struct FamilyRoots {
  Int n_prime, n_second;  // k(k + j_i(k)) +- S_i(k)
};
FamilyRoots family_roots(long i, const Int& k);

/// Square pair made of two square triangular numbers: k = t_p, k+j = t_q
/// (indices into the square-triangular sequence, 1 <= p < q), with
/// sqrt(Pi) = 2 d_p d_q recovered by exact square root.
struct BiPythPair {
  Int k, j, sqrt_pi;
};
BiPythPair bi_pyth_pair(long p, long q);

/// Matrix [k-1][i] = j_i(k) for k in [1, kmax], i in [0, imax] (the i = 0
/// column is identically zero). Every entry's quadratic number is checked to
/// be a perfect square.
std::vector<std::vector<Int>> table2(long kmax, long imax);

}  // namespace sqsum
