#include "sqsum/interval.hpp"

#include <algorithm>

namespace sqsum {

namespace {

void check_interval(const Interval& iv, const char* side) {
  if (iv.lo > iv.hi)
    throw std::domain_error(std::string("normalize: malformed ") + side +
                            " interval (lo > hi)");
}

}  // namespace

NormalizedCase normalize(const Interval& left, const Interval& right) {
  check_interval(left, "left");
  check_interval(right, "right");

  Interval a = left, b = right;
  const Int olo = std::max(a.lo, b.lo);
  const Int ohi = std::min(a.hi, b.hi);
  if (olo <= ohi) {
    // The intervals intersect. Identical inputs cancel completely; nested
    // inputs leave a non-interval (or empty) difference. Neither has a
    // canonical (j,m,k,n) form.
    const bool a_in_b = b.lo <= a.lo && a.hi <= b.hi;
    const bool b_in_a = a.lo <= b.lo && b.hi <= a.hi;
    if (a_in_b || b_in_a) return Degenerate{};
    // Partial overlap: delete the intersection from both sides.
    if (a.lo < b.lo) {
      a.hi = b.lo - 1;
      b.lo = ohi + 1;
    } else {
      b.hi = a.lo - 1;
      a.lo = ohi + 1;
    }
  }

  // Disjoint from here on. Order positionally.
  Interval lower = a.lo < b.lo ? a : b;
  Interval upper = a.lo < b.lo ? b : a;

  if (lower.length() == upper.length()) return Symmetric{};
  if (lower.length() < upper.length()) {
    // Negate all numbers in both intervals; this flips positional order and
    // makes the lower interval the longer one.
    Interval nl{-upper.hi, -upper.lo};
    Interval nu{-lower.hi, -lower.lo};
    lower = nl;
    upper = nu;
  }

  const Int k = upper.length();
  const Int n = lower.hi - k;
  const Int m = n - lower.lo;
  const Int j = upper.lo - lower.hi - 1;
  Canonical c{CaseParams{j, m, k}, n};
  c.params.validate();
  return c;
}

QuadraticForm quadratic_of(const CaseParams& p) {
  p.validate();
  const Int& j = p.j;
  const Int& m = p.m;
  const Int& k = p.k;
  QuadraticForm q;
  q.a = m + 1;
  q.b = -(2 * k * (j + k) + m * (m + 1));
  // m(2m^2+3m+1)/6 = m(m+1)(2m+1)/6 is the m-th square-sum prefix, an integer.
  q.c = sum_sq_prefix(m) - k * (j + k) * (j + 2 * k + 1);
  return q;
}

Int discriminant(const CaseParams& p) {
  p.validate();
  const Int& j = p.j;
  const Int& m = p.m;
  const Int& k = p.k;
  const Int w = k + m + 1;
  return 4 * k * (j * w * (j + 2 * k + m + 1) + k * w * w) -
         exact_div(m * (m + 1) * (m + 1) * (m + 2), 3);
}

RootStatus roots(const CaseParams& p) {
  const QuadraticForm q = quadratic_of(p);
  const Int d = discriminant(p);
  if (d < 0) return NegativeDisc{d};
  const auto s = is_perfect_square(d);
  if (!s) return IrrationalDisc{d};
  // a = m+1 > 0, so (-b - s)/(2a) <= (-b + s)/(2a)
  Rat lo = rational(-q.b - *s, 2 * q.a);
  Rat hi = rational(-q.b + *s, 2 * q.a);
  return RationalRoots{std::move(lo), std::move(hi), *s, d == 0};
}

std::pair<Int, Int> side_sums(const CaseParams& p, const Int& n) {
  p.validate();
  const Int& j = p.j;
  const Int& m = p.m;
  const Int& k = p.k;
  Int left;
  if (m > n) {
    const Int d = m - n;
    left = exact_div(n * (n + 1) * (2 * n + 1) + d * (d + 1) * (2 * d + 1), 6);
  } else {
    const Int d = n - m;
    left = exact_div(n * (n + 1) * (2 * n + 1) - (d - 1) * d * (2 * d - 1), 6);
  }
  Int right = k * (j + k) * (j + 2 * k + 2 * n + 1);
  return {left, right};
}

VerifyResult verify_solution(const CaseParams& p, const Int& n) {
  p.validate();
  const Int ls = sum_sq_interval(n - p.m, n + p.k);
  const Int rs = sum_sq_interval(n + p.k + p.j + 1, n + 2 * p.k + p.j);
  return {ls == rs, ls, rs};
}

DostorIdentity dostor(const Int& k) {
  if (k < 1) throw std::domain_error("dostor: k must be positive");
  DostorIdentity out;
  out.n_prime = k * (2 * k + 1);
  out.n_second = -k;
  const auto v = verify_solution(CaseParams{0, 0, k}, out.n_prime);
  if (!v.equal) throw std::logic_error("dostor: identity failed to verify");
  out.common_sum = v.left_sum;
  out.closed_form =
      exact_div(k * (k + 1) * (2 * k + 1) * (12 * k * k + 12 * k + 1), 6);
  if (out.closed_form != out.common_sum)
    throw std::logic_error("dostor: closed form disagrees with summation");
  return out;
}

}  // namespace sqsum
