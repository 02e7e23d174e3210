#include "sqsum/pell.hpp"

namespace sqsum {

namespace {

const QuadExt kOnePlusRoot2(Rat(1), Rat(1));
const QuadExt kOneMinusRoot2(Rat(1), Rat(-1));
const QuadExt kThreePlus2Root2(Rat(3), Rat(2));
const QuadExt kThreeMinus2Root2(Rat(3), Rat(-2));

void check_index(long i, const char* what) {
  if (i < 0) throw std::domain_error(std::string(what) + ": negative index");
}

}  // namespace

Int x_at(long i) {
  check_index(i, "x_at");
  Int prev = 0, cur = 1;
  if (i == 0) return prev;
  for (long s = 1; s < i; ++s) {
    Int next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Int> x_sequence(long upto) {
  check_index(upto, "x_sequence");
  std::vector<Int> xs;
  xs.reserve(static_cast<size_t>(upto) + 1);
  xs.emplace_back(0);
  if (upto >= 1) xs.emplace_back(1);
  for (long i = 2; i <= upto; ++i) xs.push_back(2 * xs[i - 1] + xs[i - 2]);
  return xs;
}

Int x_explicit(long i) {
  check_index(i, "x_explicit");
  const QuadExt diff = qext_pow(kOnePlusRoot2, static_cast<unsigned long>(i)) -
                       qext_pow(kOneMinusRoot2, static_cast<unsigned long>(i));
  // sqrt(2)/4 = 0 + (1/4) sqrt(2)
  const QuadExt value = QuadExt(Rat(0), rational(1, 4)) * diff;
  return qext_to_int(value, "x_explicit");
}

SquareTriangular square_triangular(long i) {
  check_index(i, "square_triangular");
  SquareTriangular out;
  if (i % 2 == 0) {
    const Int xi = x_at(i);
    out.t = 2 * xi * xi;
  } else {
    const Int s = x_at(i - 1) + x_at(i);
    out.t = s * s;
  }
  const auto root = is_perfect_square(triangular(out.t));
  if (!root)
    throw std::logic_error("square_triangular: t(t+1)/2 is not a square");
  out.d = *root;
  return out;
}

SquareTriangular euler_td(long n) {
  check_index(n, "euler_td");
  const QuadExt p = qext_pow(kThreePlus2Root2, static_cast<unsigned long>(n));
  const QuadExt q = qext_pow(kThreeMinus2Root2, static_cast<unsigned long>(n));
  const QuadExt tq = QuadExt(rational(1, 4), Rat(0)) * (p + q) -
                     QuadExt(rational(1, 2), Rat(0));
  // 1/(4 sqrt(2)) = sqrt(2)/8
  const QuadExt dq = QuadExt(Rat(0), rational(1, 8)) * (p - q);
  SquareTriangular out{qext_to_int(tq, "euler_td t"),
                       qext_to_int(dq, "euler_td d")};
  if (out.t < 0 || out.d < 0)
    throw std::logic_error("euler_td: negative component");
  return out;
}

PellState pell_step(const PellState& s) {
  PellState next{3 * s.t + 4 * s.d + 1, 2 * s.t + 3 * s.d + 1};
  return next;
}

IsoscelesTriple near_isosceles(long i) {
  if (i < 1) throw std::domain_error("near_isosceles: index must be >= 1");
  const Int xi = x_at(i);
  const Int xn = x_at(i + 1);
  IsoscelesTriple out;
  out.n = (i % 2 == 1) ? Int(xn * xn - xi * xi) : Int(2 * xi * xn);
  out.j = xi * xi + xn * xn - out.n - 2;
  return out;
}

RootStatus k1_roots(const Int& j) {
  return roots(CaseParams{j, 0, 1});
}

}  // namespace sqsum
