#include "sqsum/format.hpp"

#include <sstream>

namespace sqsum {

namespace {

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace

std::string class_label(const SquarePairRecord& r) {
  switch (r.cls) {
    case PairClass::Dostor:
      return "dostor";
    case PairClass::Family:
      return "family(" + std::to_string(r.family_i) + ")";
    case PairClass::BiPythOpposite:
      return "bipyth(" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
    case PairClass::Exception:
      return "exception";
  }
  return "?";
}

std::string format_square_pairs(const std::vector<SquarePairRecord>& recs,
                                OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::Csv) {
    os << "k,j,sqrtPi,class\n";
    for (const auto& r : recs)
      os << r.k.get_str() << ',' << r.j.get_str() << ',' << r.sqrt_pi.get_str()
         << ',' << class_label(r) << '\n';
  } else {
    for (const auto& r : recs)
      os << "{\"k\":\"" << r.k.get_str() << "\",\"j\":\"" << r.j.get_str()
         << "\",\"sqrtPi\":\"" << r.sqrt_pi.get_str() << "\",\"class\":\""
         << class_label(r) << "\"}\n";
  }
  return os.str();
}

std::string format_disc_hits(const std::vector<DiscHit>& hits,
                             OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::Csv) {
    os << "j,m,k,n,sqrtD\n";
    for (const auto& h : hits) {
      os << h.j.get_str() << ',' << h.m.get_str() << ',' << h.k.get_str()
         << ',' << rat_str(h.root_lo) << ',' << h.sqrt_d.get_str() << '\n';
      if (!h.double_root)
        os << h.j.get_str() << ',' << h.m.get_str() << ',' << h.k.get_str()
           << ',' << rat_str(h.root_hi) << ',' << h.sqrt_d.get_str() << '\n';
    }
  } else {
    for (const auto& h : hits) {
      const auto row = [&](const Rat& n) {
        os << "{\"j\":\"" << h.j.get_str() << "\",\"m\":\"" << h.m.get_str()
           << "\",\"k\":\"" << h.k.get_str() << "\",\"n\":\"" << rat_str(n)
           << "\",\"sqrtD\":\"" << h.sqrt_d.get_str() << "\",\"double\":"
           << (h.double_root ? "true" : "false") << "}\n";
      };
      row(h.root_lo);
      if (!h.double_root) row(h.root_hi);
    }
  }
  return os.str();
}

std::string format_type2(const std::vector<Type2Hit>& hits, OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::Csv) {
    os << "a,b,d\n";
    for (const auto& h : hits)
      os << h.a.get_str() << ',' << h.b.get_str() << ',' << h.d.get_str()
         << '\n';
  } else {
    for (const auto& h : hits)
      os << "{\"a\":\"" << h.a.get_str() << "\",\"b\":\"" << h.b.get_str()
         << "\",\"d\":\"" << h.d.get_str() << "\"}\n";
  }
  return os.str();
}

std::string poly_json(const IntPolynomial& p) {
  std::ostringstream os;
  os << "{\"coeffs\":[";
  const auto& cs = p.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) os << ',';
    os << '"' << cs[i].get_str() << '"';
  }
  os << "]}";
  return os.str();
}

}  // namespace sqsum
