#include "sqsum/search.hpp"

#include <algorithm>
#include <thread>

#include "sqsum/arith.hpp"
#include "sqsum/pell.hpp"

namespace sqsum {

namespace {

bool exact_square(const Int& v, Int& root) {
  if (!maybe_square_mod64(v)) return false;
  const auto r = is_perfect_square(v);
  if (!r) return false;
  root = *r;
  return true;
}

// Read-only classification context shared by scan workers.
struct PairClassifier {
  std::vector<IntPolynomial> j_polys;  // j_polys[i-1] = j_i
  std::vector<Int> tri;                // square-triangular indices t_0, t_1, ...

  explicit PairClassifier(const Int& smax) {
    for (long i = 1;; ++i) {
      IntPolynomial jp = j_poly(i);
      if (jp.eval(1) > smax) break;  // j_i(k) is increasing in k
      j_polys.push_back(std::move(jp));
    }
    for (long i = 0;; ++i) {
      SquareTriangular st = square_triangular(i);
      if (st.t > smax) break;
      tri.push_back(std::move(st.t));
    }
  }

  long tri_index(const Int& v) const {
    for (size_t i = 0; i < tri.size(); ++i)
      if (tri[i] == v) return static_cast<long>(i);
    return -1;
  }

  void classify(SquarePairRecord& rec) const {
    if (rec.j == 0) {
      rec.cls = PairClass::Dostor;
      return;
    }
    for (size_t i = 0; i < j_polys.size(); ++i) {
      const Int jv = j_polys[i].eval(rec.k);
      if (jv == rec.j) {
        rec.cls = PairClass::Family;
        rec.family_i = static_cast<long>(i) + 1;
        return;
      }
      if (jv > rec.j) break;
    }
    const long p = tri_index(rec.k);
    const long q = tri_index(rec.k + rec.j);
    if (p >= 1 && q > p) {
      rec.cls = PairClass::BiPythOpposite;
      rec.p = p;
      rec.q = q;
      return;
    }
    rec.cls = PairClass::Exception;
  }
};

void scan_pairs_stripe(const Int& k_first, const Int& k_last, const Int& smax,
                       const PairClassifier& ctx,
                       std::vector<SquarePairRecord>& out) {
  Int root;
  for (Int k = k_first; k <= k_last; ++k) {
    const Int base = k * (k + 1);
    Int ss = base;  // s(s+1), updated incrementally
    for (Int s = k; s <= smax; ++s) {
      if (exact_square(base * ss, root)) {
        SquarePairRecord rec;
        rec.k = k;
        rec.j = s - k;
        rec.sqrt_pi = root;
        ctx.classify(rec);
        out.push_back(std::move(rec));
      }
      ss += 2 * (s + 1);
    }
  }
}

std::vector<std::pair<Int, Int>> stripes(const Int& lo, const Int& hi,
                                         int workers) {
  std::vector<std::pair<Int, Int>> out;
  if (hi < lo) return out;
  const Int total = hi - lo + 1;
  Int n(workers < 1 ? 1 : workers);
  if (n > total) n = total;
  Int begin = lo;
  for (Int w = 0; w < n; ++w) {
    // contiguous, near-equal stripes
    Int len = total / n + (w < total % n ? 1 : 0);
    out.emplace_back(begin, begin + len - 1);
    begin += len;
  }
  return out;
}

}  // namespace

std::vector<SquarePairRecord> scan_square_pairs(const Int& kmax,
                                                const Int& smax, int workers) {
  if (kmax < 1 || smax < 1)
    throw std::domain_error("scan_square_pairs: bounds must be >= 1");
  const PairClassifier ctx(smax);

  const auto parts = stripes(1, kmax, workers);
  std::vector<std::vector<SquarePairRecord>> buckets(parts.size());
  if (parts.size() <= 1) {
    if (!parts.empty())
      scan_pairs_stripe(parts[0].first, parts[0].second, smax, ctx, buckets[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(parts.size());
    for (size_t w = 0; w < parts.size(); ++w)
      pool.emplace_back([&, w] {
        scan_pairs_stripe(parts[w].first, parts[w].second, smax, ctx,
                          buckets[w]);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<SquarePairRecord> out;
  for (auto& b : buckets)
    for (auto& rec : b) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(),
            [](const SquarePairRecord& x, const SquarePairRecord& y) {
              return x.k != y.k ? x.k < y.k : x.j < y.j;
            });
  return out;
}

namespace {

void scan_disc_stripe(const Int& j, const Int& m, const Int& k_first,
                      const Int& k_last, std::vector<DiscHit>& out) {
  Int root;
  for (Int k = k_first; k <= k_last; ++k) {
    const CaseParams p{j, m, k};
    const Int d = discriminant(p);
    if (d < 0 || !exact_square(d, root)) continue;
    const RootStatus rs = roots(p);
    const auto& rr = std::get<RationalRoots>(rs);
    out.push_back(DiscHit{j, m, k, rr.sqrt_disc, rr.lo, rr.hi, rr.double_root});
  }
}

}  // namespace

std::vector<DiscHit> scan_discriminant(std::vector<Int> js,
                                       const IntRange& m_range,
                                       const IntRange& k_range, int workers) {
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (const Int& j : js)
    if (j < 0) throw std::domain_error("scan_discriminant: j must be >= 0");
  if (m_range.lo < 0 || k_range.lo < 1)
    throw std::domain_error("scan_discriminant: need m >= 0 and k >= 1");

  std::vector<DiscHit> out;
  for (const Int& j : js) {
    for (Int m = m_range.lo; m <= m_range.hi; ++m) {
      Int klo = k_range.lo, khi = k_range.hi;
      if (j == 0 && m >= 1) {
        const J0Bound bound = j0_k_bound(m);
        klo = std::max(klo, bound.k_lower_feasible);
        khi = std::min(khi, *bound.k_upper);
      }
      if (klo > khi) continue;

      const auto parts = stripes(klo, khi, workers);
      std::vector<std::vector<DiscHit>> buckets(parts.size());
      if (parts.size() <= 1) {
        if (!parts.empty())
          scan_disc_stripe(j, m, parts[0].first, parts[0].second, buckets[0]);
      } else {
        std::vector<std::thread> pool;
        pool.reserve(parts.size());
        for (size_t w = 0; w < parts.size(); ++w)
          pool.emplace_back([&, w] {
            scan_disc_stripe(j, m, parts[w].first, parts[w].second,
                             buckets[w]);
          });
        for (auto& th : pool) th.join();
      }
      for (auto& b : buckets)
        for (auto& hit : b) out.push_back(std::move(hit));
    }
  }
  std::sort(out.begin(), out.end(), [](const DiscHit& x, const DiscHit& y) {
    if (x.j != y.j) return x.j < y.j;
    if (x.m != y.m) return x.m < y.m;
    return x.k < y.k;
  });
  return out;
}

J0Bound j0_k_bound(const Int& m) {
  if (m < 0) throw std::domain_error("j0_k_bound: m must be >= 0");
  J0Bound out;
  const Int g = exact_div(m * (m + 1) * (m + 1) * (m + 2), 3);

  // Least y = k(k+m+1) with 4y^2 >= g, then least k achieving it.
  Int y = isqrt(g) / 2;
  if (y < 1) y = 1;
  while (4 * y * y < g) ++y;
  while (y > 1 && 4 * (y - 1) * (y - 1) >= g) --y;
  Int k = (isqrt((m + 1) * (m + 1) + 4 * y) - (m + 1)) / 2;
  if (k < 1) k = 1;
  while (k * (k + m + 1) < y) ++k;
  while (k > 1 && (k - 1) * (k + m) >= y) --k;
  out.k_lower_feasible = k;

  if (m == 0) return out;  // D(0,0,k) is a square for every k: no upper bound

  // Largest k with 4k(k+m+1) <= g+1; 0 when none (empty window).
  Int ku = (isqrt((m + 1) * (m + 1) + g + 1) - (m + 1)) / 2;
  if (ku < 0) ku = 0;
  while (ku >= 1 && 4 * ku * (ku + m + 1) > g + 1) --ku;
  while (4 * (ku + 1) * (ku + m + 2) <= g + 1) ++ku;
  out.k_upper = ku;
  return out;
}

std::vector<Type2Hit> type2_scan(const Int& amax, const Int& bmax) {
  if (amax < 1 || bmax < 1)
    throw std::domain_error("type2_scan: bounds must be >= 1");
  std::vector<Type2Hit> out;
  Int root;
  for (Int a = 1; a <= amax; ++a) {
    const Int base = 2 * a * (a + 1);
    Int bb = a * (a + 1);
    for (Int b = a; b <= bmax; ++b) {
      if (exact_square(base * bb, root)) out.push_back(Type2Hit{a, b, root});
      bb += 2 * (b + 1);
    }
  }
  return out;  // loop order is already (a, b)-sorted
}

EulerType2 type2_from_euler(long i) {
  if (i < 1)
    throw std::domain_error("type2_from_euler: no solution at index < 1");
  const SquareTriangular st = square_triangular(i);
  EulerType2 out;
  out.a = 2 * st.t;
  out.b = 2 * st.t + 1;
  out.root = 2 * st.d * (2 * st.t + 1);
  if (out.a * (out.a + 1) * out.b * (out.b + 1) != 2 * out.root * out.root)
    throw std::logic_error("type2_from_euler: identity failed");
  return out;
}

std::vector<Int> swap23(std::vector<Int> values) {
  for (Int& v : values) {
    if (v == 2) {
      v = 3;
      return values;
    }
    if (v == 3) {
      v = 2;
      return values;
    }
  }
  throw std::domain_error("swap23: no entry equal to 2 or 3");
}

SRatio s_ratio(const Int& n, bool exclude_diagonal) {
  if (n < 1) throw std::domain_error("s_ratio: N must be >= 1");
  Int count = 0;
  Int root;
  for (Int a = 1; a <= n; ++a) {
    const Int base = a * (a + 1);
    Int bb = base;
    for (Int b = a; b <= n; ++b) {
      if (a == b) {
        if (!exclude_diagonal) ++count;  // (a(a+1))^2 is always a square
      } else if (exact_square(base * bb, root)) {
        count += 2;  // ordered pairs: (a,b) and (b,a)
      }
      bb += 2 * (b + 1);
    }
  }
  return SRatio{count, rational(count, n)};
}

}  // namespace sqsum
