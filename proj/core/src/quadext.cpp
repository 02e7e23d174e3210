#include "sqsum/quadext.hpp"

#include <string>

namespace sqsum {

QuadExt qext_pow(const QuadExt& x, unsigned long e) {
  QuadExt result(Rat(1), Rat(0));
  QuadExt base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Int qext_to_int(const QuadExt& x, const char* what) {
  if (!x.is_rational())
    throw std::logic_error(std::string(what) + ": sqrt(2) part did not vanish");
  if (!is_integer(x.a))
    throw std::logic_error(std::string(what) + ": non-integer result");
  return x.a.get_num();
}

}  // namespace sqsum
