#include "sqsum/family.hpp"

#include <string>

#include "sqsum/arith.hpp"
#include "sqsum/pell.hpp"

namespace sqsum {

namespace {

Int fact(long n) {
  if (n < 0) throw std::logic_error("fact: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// N!! for odd N, the product of all odd numbers from 1 to N; (-1)!! = 1.
Int dfact_odd(long n) {
  if (n == -1) return 1;
  if (n < -1 || n % 2 == 0) throw std::logic_error("dfact_odd: bad argument");
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int pow2(long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Intermediate coefficient arithmetic runs in exact rationals; each value is
// then required to be a strictly positive integer, which the construction
// guarantees. A failure here means the formulas were transcribed wrong.
Int positive_integer(const Rat& q, const char* what, long t) {
  if (!is_integer(q) || q <= 0)
    throw std::logic_error(std::string(what) + ": coefficient " +
                           std::to_string(t) + " is not a positive integer");
  return q.get_num();
}

}  // namespace

FamilyTriple even_family(long ell) {
  if (ell < 1) throw std::domain_error("even_family: ell must be >= 1");
  const long L = ell;
  const Int scale = 2 * Int(L) + 1;  // the (2l+1) factor of the even case

  std::vector<Int> a(static_cast<size_t>(L) + 1);
  std::vector<Int> b(static_cast<size_t>(L) + 1);
  for (long t = 0; t <= L; ++t) {
    const Rat at = rational(pow2(2 * t) * fact(L + t) * scale,
                            fact(2 * t + 1) * fact(L - t));
    a[static_cast<size_t>(t)] = positive_integer(at, "even_family a", t);
    const Rat bt =
        rational(pow2(2 * t) * fact(L + t), fact(2 * t) * fact(L - t));
    b[static_cast<size_t>(t)] = positive_integer(bt, "even_family b", t);
  }

  std::vector<Int> c(static_cast<size_t>(2 * L) + 2);
  c[0] = 1;  // the t = 0 branch of the piecewise definition is overridden to 1
  for (long t = 1; t <= L; ++t) {
    Rat ct;
    if (t % 2 == 1) {
      const long u = (t - 1) / 2;
      const Int dd = exact_div(dfact_odd(2 * L + t), dfact_odd(2 * L - t));
      ct = rational(pow2(3 * t - 2) * fact(L + u) * dd * scale,
                    fact(2 * t) * fact(L - u));
    } else {
      const long u = t / 2;
      const Int dd =
          exact_div(dfact_odd(2 * L + t - 1), dfact_odd(2 * L - t + 1));
      ct = rational(pow2(3 * t - 1) * fact(L + u) * dd * scale,
                    fact(2 * t) * fact(L - u));
    }
    c[static_cast<size_t>(t)] = positive_integer(ct, "even_family c", t);
  }
  for (long t = L + 1; t <= 2 * L + 1; ++t) {
    const Rat ct = rational(pow2(2 * t - 1) * fact(2 * L + t) * scale,
                            fact(2 * t) * fact(2 * L + 1 - t));
    c[static_cast<size_t>(t)] = positive_integer(ct, "even_family c", t);
  }

  return FamilyTriple{Parity::Even, ell, IntPolynomial(std::move(a)),
                      IntPolynomial(std::move(b)), IntPolynomial(std::move(c))};
}

FamilyTriple odd_family(long ell) {
  if (ell < 0) throw std::domain_error("odd_family: ell must be >= 0");
  const long L = ell;
  const Int scale = Int(L) + 1;  // the (l+1) factor of the odd case

  std::vector<Int> a(static_cast<size_t>(L) + 1);
  for (long t = 0; t <= L; ++t) {
    const Rat at = rational(pow2(2 * t + 1) * fact(L + t + 1),
                            fact(2 * t + 1) * fact(L - t));
    a[static_cast<size_t>(t)] = positive_integer(at, "odd_family a", t);
  }

  std::vector<Int> b(static_cast<size_t>(L) + 2);
  b[0] = 1;
  for (long t = 1; t <= L + 1; ++t) {
    const Rat bt = rational(pow2(2 * t - 1) * fact(L + t) * scale,
                            fact(2 * t - 1) * fact(L - t + 1) * Int(t));
    b[static_cast<size_t>(t)] = positive_integer(bt, "odd_family b", t);
  }

  std::vector<Int> c(static_cast<size_t>(2 * L) + 3);
  c[0] = 1;
  for (long t = 1; t <= L; ++t) {
    Rat ct;
    if (t % 2 == 1) {
      const long u = (t + 1) / 2;
      const Int dd = exact_div(dfact_odd(2 * L + t), dfact_odd(2 * L - t + 2));
      ct = rational(pow2(3 * t) * fact(L + u) * dd * scale,
                    fact(2 * t) * fact(L - u + 1));
    } else {
      const long u = t / 2;
      const Int dd =
          exact_div(dfact_odd(2 * L + t + 1), dfact_odd(2 * L - t + 1));
      ct = rational(pow2(3 * t - 1) * fact(L + u) * dd * scale,
                    fact(2 * t) * fact(L - u + 1));
    }
    c[static_cast<size_t>(t)] = positive_integer(ct, "odd_family c", t);
  }
  for (long t = L + 1; t <= 2 * L + 2; ++t) {
    const Rat ct = rational(pow2(2 * t) * fact(2 * L + t + 1) * scale,
                            fact(2 * t) * fact(2 * L + 2 - t));
    c[static_cast<size_t>(t)] = positive_integer(ct, "odd_family c", t);
  }

  return FamilyTriple{Parity::Odd, ell, IntPolynomial(std::move(a)),
                      IntPolynomial(std::move(b)), IntPolynomial(std::move(c))};
}

bool verify_family(const FamilyTriple& f) {
  const IntPolynomial k({0, 1});
  const IntPolynomial k1({1, 1});
  const IntPolynomial one({1});
  for (const Int& coef : f.A.coeffs())
    if (coef <= 0) return false;
  for (const Int& coef : f.B.coeffs())
    if (coef <= 0) return false;
  for (const Int& coef : f.C.coeffs())
    if (coef <= 0) return false;
  if (f.parity == Parity::Even) {
    if (f.A.degree() != f.ell || f.B.degree() != f.ell ||
        f.C.degree() != 2 * f.ell + 1)
      return false;
    return k * f.A * f.A + one == f.C && k1 * f.B * f.B == f.C;
  }
  if (f.A.degree() != f.ell || f.B.degree() != f.ell + 1 ||
      f.C.degree() != 2 * f.ell + 2)
    return false;
  return k * k1 * f.A * f.A + one == f.C && f.B * f.B == f.C;
}

namespace {

FamilyTriple family_for(long i) {
  if (i < 1) throw std::domain_error("family index must be >= 1");
  return i % 2 == 0 ? even_family(i / 2) : odd_family((i - 1) / 2);
}

}  // namespace

IntPolynomial j_poly(long i) {
  return family_for(i).C - IntPolynomial({1, 1});
}

Int j_value(long i, const Int& k) {
  if (k < 1) throw std::domain_error("j_value: k must be >= 1");
  return j_poly(i).eval(k);
}

IntPolynomial pi_sqrt(long i) {
  const FamilyTriple f = family_for(i);
  return IntPolynomial({0, 1}) * IntPolynomial({1, 1}) * f.A * f.B;
}

FamilyRoots family_roots(long i, const Int& k) {
  if (k < 1) throw std::domain_error("family_roots: k must be >= 1");
  const Int j = j_value(i, k);
  const Int s = pi_sqrt(i).eval(k);
  const Int base = k * (k + j);
  return FamilyRoots{base + s, base - s};
}

BiPythPair bi_pyth_pair(long p, long q) {
  if (p < 0 || q <= p)
    throw std::domain_error("bi_pyth_pair: need 0 <= p < q");
  const SquareTriangular sp = square_triangular(p);
  const SquareTriangular sq = square_triangular(q);
  if (sp.t == 0)
    throw std::domain_error("bi_pyth_pair: t_p = 0 gives no positive k");
  BiPythPair out;
  out.k = sp.t;
  out.j = sq.t - sp.t;
  const Int pi = out.k * (out.k + 1) * sq.t * (sq.t + 1);
  const auto root = is_perfect_square(pi);
  if (!root) throw std::logic_error("bi_pyth_pair: product is not a square");
  out.sqrt_pi = *root;
  return out;
}

std::vector<std::vector<Int>> table2(long kmax, long imax) {
  if (kmax < 1 || imax < 1)
    throw std::domain_error("table2: kmax and imax must be >= 1");
  std::vector<IntPolynomial> polys;
  polys.reserve(static_cast<size_t>(imax));
  for (long i = 1; i <= imax; ++i) polys.push_back(j_poly(i));

  std::vector<std::vector<Int>> rows;
  rows.reserve(static_cast<size_t>(kmax));
  for (Int k = 1; k <= kmax; ++k) {
    std::vector<Int> row;
    row.reserve(static_cast<size_t>(imax) + 1);
    row.emplace_back(0);  // j_0(k) = 0: the adjacent-interval column
    for (const auto& jp : polys) {
      Int j = jp.eval(k);
      const Int pi = k * (k + 1) * (k + j) * (k + j + 1);
      if (!is_perfect_square(pi))
        throw std::logic_error("table2: entry failed the square check");
      row.push_back(std::move(j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sqsum
