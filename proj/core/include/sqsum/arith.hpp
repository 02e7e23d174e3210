#pragma once

#include <optional>

#include "sqsum/numbers.hpp"

namespace sqsum {

/// floor(sqrt(n)). Throws std::domain_error for n < 0.
Int isqrt(const Int& n);

/// The nonnegative root r with r*r == n, or nullopt when n is negative or
/// not a square.
std::optional<Int> is_perfect_square(const Int& n);

/// Cheap residue prefilter for scan loops: false means n is certainly not a
/// square; true means "maybe" and the exact test must still run. n >= 0.
bool maybe_square_mod64(const Int& n);

/// t(t+1)/2. Throws std::domain_error for t < 0.
Int triangular(const Int& t);

/// 1^2 + 2^2 + ... + t^2 = t(t+1)(2t+1)/6. Throws std::domain_error for t < 0.
Int sum_sq_prefix(const Int& t);

/// Sum of x^2 for x in [a, b], endpoints of either sign.
/// Throws std::domain_error when a > b.
Int sum_sq_interval(const Int& a, const Int& b);

}  // namespace sqsum
