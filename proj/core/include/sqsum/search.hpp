#pragma once

#include <optional>
#include <vector>

#include "sqsum/family.hpp"
#include "sqsum/interval.hpp"

namespace sqsum {

enum class PairClass { Dostor, Family, BiPythOpposite, Exception };

/// A pair (k, j) whose quadratic number k(k+1)(k+j)(k+j+1) is a perfect
/// square, classified by precedence: j = 0, then the least family index i
/// with j_i(k) = j, then the bi-Pythagorean predicate (both k(k+1)/2 and
/// (k+j)(k+j+1)/2 perfect squares), and Exception otherwise.
struct SquarePairRecord {
  Int k, j, sqrt_pi;
  PairClass cls;
  long family_i = 0;  // valid for PairClass::Family
  long p = 0, q = 0;  // valid for PairClass::BiPythOpposite: k = t_p, k+j = t_q
};

/// One grid point where the discriminant D(j,m,k) is a perfect square, with
/// both exact roots (reported once when they coincide).
struct DiscHit {
  Int j, m, k;
  Int sqrt_d;
  Rat root_lo, root_hi;
  bool double_root;
};

/// Inclusive integer range.
struct IntRange {
  Int lo, hi;
};

/// All square pairs with 1 <= k <= kmax and k <= k+j <= smax, classified and
/// sorted by (k, j). Workers split the k range into contiguous stripes; the
/// merged output is identical for any worker count.
std::vector<SquarePairRecord> scan_square_pairs(const Int& kmax,
                                                const Int& smax,
                                                int workers = 1);

/// All (j,m,k) in the grid with D(j,m,k) a perfect square, sorted by
/// (j, m, k). For j = 0 the k range is narrowed by j0_k_bound, which is
/// lossless.
std::vector<DiscHit> scan_discriminant(std::vector<Int> js,
                                       const IntRange& m_range,
                                       const IntRange& k_range,
                                       int workers = 1);

/// Feasible k window for j = 0 at a given m.
///
/// D(0,m,k) = [2k(k+m+1)]^2 - g(m) with g(m) = m(m+1)^2(m+2)/3. For m >= 1
/// that value can only be a perfect square if it fits under the next square
/// down, forcing 4k(k+m+1) <= g(m)+1; k_upper is the largest such k, with 0
/// when no k >= 1 qualifies. k_lower_feasible is the least k with
/// D(0,m,k) >= 0. For m = 0 the discriminant is itself a perfect square for
/// every k, so there is no upper bound and k_upper is empty.
struct J0Bound {
  std::optional<Int> k_upper;
  Int k_lower_feasible;
};
J0Bound j0_k_bound(const Int& m);

/// Solution of 2 a(a+1) b(b+1) = d^2 ("type (ii)" product for s = 2).
struct Type2Hit {
  Int a, b, d;
};

/// All hits with 1 <= a <= amax, a <= b <= bmax, sorted by (a, b).
std::vector<Type2Hit> type2_scan(const Int& amax, const Int& bmax);

/// Type (ii) pair generated from the i-th square triangular solution
/// t(t+1) = 2 d^2: a = 2t, b = 2t+1, and a(a+1) b(b+1) = 2 root^2 with
/// root = 2 d (2t+1). Requires i >= 1 (i = 0 is the zero solution).
struct EulerType2 {
  Int a, b, root;
};
EulerType2 type2_from_euler(long i);

/// Replaces the first entry equal to 2 by 3 (or 3 by 2), which toggles a
/// product vector between type (i) and type (ii). Throws std::domain_error
/// when no such entry exists.
std::vector<Int> swap23(std::vector<Int> values);

/// count = number of ordered pairs (a,b) in [1,N]^2 with a(a+1)b(b+1) a
/// perfect square; ratio = count/N. With exclude_diagonal the a = b pairs
/// (always square) are skipped.
struct SRatio {
  Int count;
  Rat ratio;
};
SRatio s_ratio(const Int& n, bool exclude_diagonal = false);

}  // namespace sqsum
