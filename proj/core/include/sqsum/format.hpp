#pragma once

#include <string>
#include <vector>

#include "sqsum/search.hpp"

namespace sqsum {

enum class OutputFormat { Csv, Json };

/// "dostor", "family(i)", "bipyth(p,q)" or "exception".
std::string class_label(const SquarePairRecord& r);

/// CSV columns: k,j,sqrtPi,class. JSON: one object per line. All integers are
/// decimal strings, preserving arbitrary precision.
std::string format_square_pairs(const std::vector<SquarePairRecord>& recs,
                                OutputFormat fmt);

/// CSV columns: j,m,k,n,sqrtD — one row per root, printed in ascending order;
/// a double root is printed once. Rationals print as "p/q".
std::string format_disc_hits(const std::vector<DiscHit>& hits,
                             OutputFormat fmt);

/// CSV columns: a,b,d with 2 a(a+1) b(b+1) = d^2.
std::string format_type2(const std::vector<Type2Hit>& hits, OutputFormat fmt);

/// {"coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
std::string poly_json(const IntPolynomial& p);

}  // namespace sqsum
