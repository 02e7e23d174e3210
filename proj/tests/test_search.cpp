#include <doctest.h>

#include <variant>

#include "sqsum/arith.hpp"
#include "sqsum/format.hpp"
#include "sqsum/search.hpp"

#include "golden_tables.hpp"

using namespace sqsum;

namespace {

// Unpruned, unclassified reference loop.
std::vector<std::pair<Int, Int>> naive_square_pairs(long kmax, long smax) {
  std::vector<std::pair<Int, Int>> out;
  for (Int k = 1; k <= kmax; ++k)
    for (Int s = k; s <= smax; ++s)
      if (is_perfect_square(k * (k + 1) * s * (s + 1)))
        out.emplace_back(k, s - k);
  return out;
}

std::vector<DiscHit> naive_disc_scan(const Int& j, long mmax, long kmax) {
  std::vector<DiscHit> out;
  for (Int m = 1; m <= mmax; ++m)
    for (Int k = 1; k <= kmax; ++k) {
      const RootStatus rs = roots({j, m, k});
      if (!std::holds_alternative<RationalRoots>(rs)) continue;
      const auto& rr = std::get<RationalRoots>(rs);
      out.push_back(
          DiscHit{j, m, k, rr.sqrt_disc, rr.lo, rr.hi, rr.double_root});
    }
  return out;
}

bool hits_equal(const DiscHit& a, const DiscHit& b) {
  return a.j == b.j && a.m == b.m && a.k == b.k && a.sqrt_d == b.sqrt_d &&
         a.root_lo == b.root_lo && a.root_hi == b.root_hi &&
         a.double_root == b.double_root;
}

}  // namespace

TEST_CASE("square-pair scan equals the naive loop") {
  const auto recs = scan_square_pairs(30, 500);
  const auto naive = naive_square_pairs(30, 500);
  REQUIRE(recs.size() == naive.size());
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].k == naive[i].first);
    CHECK(recs[i].j == naive[i].second);
    CHECK(recs[i].sqrt_pi * recs[i].sqrt_pi ==
          recs[i].k * (recs[i].k + 1) * (recs[i].k + recs[i].j) *
              (recs[i].k + recs[i].j + 1));
  }
}

TEST_CASE("square-pair classification is sound") {
  const auto recs = scan_square_pairs(10, 70000);
  bool saw_bipyth = false;
  for (const auto& r : recs) {
    switch (r.cls) {
      case PairClass::Dostor:
        CHECK(r.j == 0);
        break;
      case PairClass::Family:
        CHECK(j_value(r.family_i, r.k) == r.j);
        // least such index
        for (long i = 1; i < r.family_i; ++i)
          CHECK(j_value(i, r.k) != r.j);
        break;
      case PairClass::BiPythOpposite:
        saw_bipyth = true;
        CHECK(is_perfect_square(triangular(r.k)).has_value());
        CHECK(is_perfect_square(triangular(r.k + r.j)).has_value());
        break;
      case PairClass::Exception:
        FAIL("unexpected exception record at k=", r.k.get_str(),
             " j=", r.j.get_str());
    }
  }
  CHECK(saw_bipyth);  // (8,41) and friends are in range
}

TEST_CASE("known bi-Pythagorean opposparity records") {
  const auto recs = scan_square_pairs(8, 60000);
  int bipyth = 0;
  for (const auto& r : recs)
    if (r.cls == PairClass::BiPythOpposite) {
      ++bipyth;
      CHECK(r.k == 8);
      CHECK(r.p == 2);
      CHECK((r.j == 41 || r.j == 1673 || r.j == 57113));
      CHECK((r.q == 3 || r.q == 5 || r.q == 7));
    }
  CHECK(bipyth == 3);
}

TEST_CASE("scan output is byte-identical for any worker count") {
  const auto one = scan_square_pairs(20, 3000, 1);
  const auto four = scan_square_pairs(20, 3000, 4);
  const auto seven = scan_square_pairs(20, 3000, 7);
  CHECK(format_square_pairs(one, OutputFormat::Csv) ==
        format_square_pairs(four, OutputFormat::Csv));
  CHECK(format_square_pairs(one, OutputFormat::Csv) ==
        format_square_pairs(seven, OutputFormat::Csv));

  const auto d1 = scan_discriminant({Int(3)}, {1, 80}, {1, 80}, 1);
  const auto d5 = scan_discriminant({Int(3)}, {1, 80}, {1, 80}, 5);
  CHECK(format_disc_hits(d1, OutputFormat::Csv) ==
        format_disc_hits(d5, OutputFormat::Csv));
}

TEST_CASE("j0 window bounds") {
  CHECK(!j0_k_bound(0).k_upper.has_value());
  CHECK(j0_k_bound(0).k_lower_feasible == 1);

  const J0Bound b1 = j0_k_bound(1);
  REQUIRE(b1.k_upper.has_value());
  CHECK(*b1.k_upper == 0);  // empty window: no k admits a square
  CHECK(b1.k_lower_feasible > *b1.k_upper);

  CHECK(*j0_k_bound(2).k_upper == 1);
  CHECK(*j0_k_bound(3).k_upper == 2);
  CHECK(*j0_k_bound(4).k_upper == 5);
  CHECK(*j0_k_bound(5).k_upper == 7);
  CHECK(*j0_k_bound(6).k_upper == 10);
  CHECK(j0_k_bound(7).k_lower_feasible == 2);
  CHECK_THROWS_AS(j0_k_bound(-1), std::domain_error);
}

TEST_CASE("j0 window contains every tabled hit") {
  for (const auto& c : golden::table4()) {
    const J0Bound b = j0_k_bound(c.m);
    REQUIRE(b.k_upper.has_value());
    CHECK(b.k_lower_feasible <= c.k);
    CHECK(*b.k_upper >= c.k);
  }
}

TEST_CASE("j0 pruning is lossless") {
  const auto pruned = scan_discriminant({Int(0)}, {1, 40}, {1, 60});
  const auto naive = naive_disc_scan(0, 40, 60);
  REQUIRE(pruned.size() == naive.size());
  for (size_t i = 0; i < pruned.size(); ++i)
    CHECK(hits_equal(pruned[i], naive[i]));
}

TEST_CASE("discriminant scan reproduces the j=1 block") {
  const auto hits = scan_discriminant({Int(1)}, {1, 100}, {1, 100});
  const auto& want = golden::table5()[0].second;
  REQUIRE(golden::table5()[0].first == 1);
  REQUIRE(hits.size() == want.size());
  for (size_t i = 0; i < hits.size(); ++i) {
    CHECK(hits[i].m == want[i].m);
    CHECK(hits[i].k == want[i].k);
    CHECK(hits[i].root_lo == Rat(want[i].n_lo));
    CHECK(hits[i].root_hi == Rat(want[i].n_hi));
    CHECK(hits[i].sqrt_d == want[i].sqrt_d);
    CHECK(hits[i].double_root == want[i].double_root);
  }
}

TEST_CASE("double roots are reported once") {
  const auto hits = scan_discriminant({Int(4)}, {1, 100}, {1, 100});
  int doubles = 0;
  for (const auto& h : hits)
    if (h.double_root) {
      ++doubles;
      CHECK(h.sqrt_d == 0);
      CHECK(h.root_lo == h.root_hi);
      CHECK(((h.m == 9 && h.k == 1) || (h.m == 54 && h.k == 11)));
    }
  CHECK(doubles == 2);
}

TEST_CASE("root denominators divide 2(m+1) across the reproduction grid") {
  std::vector<Int> js;
  for (long j = 0; j <= 18; ++j) js.emplace_back(j);
  const auto hits = scan_discriminant(std::move(js), {1, 100}, {1, 100}, 4);
  for (const auto& h : hits) {
    CHECK(Int(2 * (h.m + 1)) % h.root_lo.get_den() == 0);
    CHECK(Int(2 * (h.m + 1)) % h.root_hi.get_den() == 0);
  }
}

TEST_CASE("type2 scan matches naive enumeration and the known examples") {
  const auto hits = type2_scan(20, 150);
  // every hit satisfies the defining equation
  for (const auto& h : hits) {
    CHECK(2 * h.a * (h.a + 1) * h.b * (h.b + 1) == h.d * h.d);
    CHECK(h.a <= h.b);
  }
  // naive reference
  std::vector<Type2Hit> naive;
  for (Int a = 1; a <= 20; ++a)
    for (Int b = a; b <= 150; ++b) {
      const auto r = is_perfect_square(2 * a * (a + 1) * b * (b + 1));
      if (r) naive.push_back(Type2Hit{a, b, *r});
    }
  REQUIRE(hits.size() == naive.size());
  for (size_t i = 0; i < hits.size(); ++i) {
    CHECK(hits[i].a == naive[i].a);
    CHECK(hits[i].b == naive[i].b);
    CHECK(hits[i].d == naive[i].d);
  }
  const auto contains = [&](long a, long b, long d) {
    for (const auto& h : hits)
      if (h.a == a && h.b == b && h.d == d) return true;
    return false;
  };
  CHECK(contains(3, 24, 120));
  CHECK(contains(4, 9, 60));
  CHECK(contains(7, 63, 672));
}

TEST_CASE("type2 pairs generated from square triangular solutions") {
  const EulerType2 e1 = type2_from_euler(1);
  CHECK(e1.a == 2);
  CHECK(e1.b == 3);
  CHECK(e1.root == 6);
  CHECK(e1.a * (e1.a + 1) * e1.b * (e1.b + 1) == 2 * e1.root * e1.root);

  const EulerType2 e2 = type2_from_euler(2);
  CHECK(e2.a == 16);
  CHECK(e2.b == 17);
  CHECK(e2.root == 204);

  // the generated pair appears in the scan with d = 2 * root
  const auto hits = type2_scan(16, 17);
  bool found = false;
  for (const auto& h : hits)
    if (h.a == e2.a && h.b == e2.b) {
      found = true;
      CHECK(h.d == 2 * e2.root);
    }
  CHECK(found);

  CHECK_THROWS_AS(type2_from_euler(0), std::domain_error);
}

TEST_CASE("the 2 <-> 3 swap toggles the product type") {
  const auto v1 = swap23({Int(3), Int(24)});
  CHECK(v1 == std::vector<Int>{2, 24});
  // type (i): the product itself is a square
  CHECK(is_perfect_square(Int(2 * 3) * Int(24 * 25)).value() == 60);

  const auto v2 = swap23({Int(2), Int(24)});
  CHECK(v2 == std::vector<Int>{3, 24});
  CHECK(is_perfect_square(2 * Int(3 * 4) * Int(24 * 25)).value() == 120);

  CHECK_THROWS_AS(swap23({Int(4), Int(9)}), std::domain_error);
}

TEST_CASE("pair counting S_N") {
  CHECK(s_ratio(1).count == 1);
  CHECK(s_ratio(7).count == 7);
  CHECK(s_ratio(7).ratio == 1);

  // brute reference at N = 8: diagonal plus the ordered pairs (1,8), (8,1)
  Int brute = 0;
  for (Int a = 1; a <= 8; ++a)
    for (Int b = 1; b <= 8; ++b)
      if (is_perfect_square(a * (a + 1) * b * (b + 1))) ++brute;
  CHECK(brute == 10);
  CHECK(s_ratio(8).count == brute);
  CHECK(s_ratio(8).ratio == rational(10, 8));
  CHECK(s_ratio(8, /*exclude_diagonal=*/true).count == 2);
  CHECK_THROWS_AS(s_ratio(0), std::domain_error);
}

TEST_CASE("formatting round-trips decimal strings") {
  SquarePairRecord rec;
  rec.k = 8;
  rec.j = 41;
  rec.sqrt_pi = 420;
  rec.cls = PairClass::BiPythOpposite;
  rec.p = 2;
  rec.q = 3;
  CHECK(format_square_pairs({rec}, OutputFormat::Csv) ==
        "k,j,sqrtPi,class\n8,41,420,bipyth(2,3)\n");
  CHECK(format_square_pairs({rec}, OutputFormat::Json) ==
        "{\"k\":\"8\",\"j\":\"41\",\"sqrtPi\":\"420\",\"class\":\"bipyth(2,3)\"}\n");

  DiscHit hit{0, 8, 8, 268, rational(-34, 9), Rat(26), false};
  CHECK(format_disc_hits({hit}, OutputFormat::Csv) ==
        "j,m,k,n,sqrtD\n0,8,8,-34/9,268\n0,8,8,26,268\n");
}
