#include "sqsum/arith.hpp"

#include <cstdint>

namespace sqsum {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Int> is_perfect_square(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool maybe_square_mod64(const Int& n) {
  // bit i set <=> i is a quadratic residue mod 64
  static constexpr std::uint64_t kResidues =
      (1ULL << 0) | (1ULL << 1) | (1ULL << 4) | (1ULL << 9) | (1ULL << 16) |
      (1ULL << 17) | (1ULL << 25) | (1ULL << 33) | (1ULL << 36) |
      (1ULL << 41) | (1ULL << 49) | (1ULL << 57);
  const unsigned long low = mpz_get_ui(n.get_mpz_t());
  return (kResidues >> (low & 63u)) & 1u;
}

Int triangular(const Int& t) {
  if (t < 0) throw std::domain_error("triangular: negative argument");
  return exact_div(t * (t + 1), 2);
}

Int sum_sq_prefix(const Int& t) {
  if (t < 0) throw std::domain_error("sum_sq_prefix: negative argument");
  return exact_div(t * (t + 1) * (2 * t + 1), 6);
}

Int sum_sq_interval(const Int& a, const Int& b) {
  if (a > b) throw std::domain_error("sum_sq_interval: a > b");
  if (a > 0) return sum_sq_prefix(b) - sum_sq_prefix(a - 1);
  if (b < 0) return sum_sq_interval(-b, -a);
  // a <= 0 <= b: both arms meet at 0, which contributes nothing
  return sum_sq_prefix(b) + sum_sq_prefix(-a);
}

}  // namespace sqsum
