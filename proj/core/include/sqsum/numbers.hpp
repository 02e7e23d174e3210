#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

namespace sqsum {

/// Arbitrary-precision signed integer. Every quantity in this library is
/// exact; floating point never enters a correctness path.
using Int = mpz_class;

/// Exact rational, always in lowest terms with positive denominator.
using Rat = mpq_class;

/// Builds num/den in canonical form (reduced, den > 0, zero is 0/1).
/// Throws std::domain_error on den == 0.
inline Rat rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Quotient n/d where d | n is guaranteed by an identity, not by the caller;
/// a nonzero remainder is therefore a bug and throws std::logic_error.
inline Int exact_div(const Int& n, const Int& d) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0)
    throw std::logic_error("exact_div: " + n.get_str() + " not divisible by " +
                           d.get_str());
  return q;
}

}  // namespace sqsum
