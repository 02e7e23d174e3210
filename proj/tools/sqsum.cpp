// sqsum — exact generation, verification and search of equal-sums-of-squares
// identities over intervals of consecutive integers.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sqsum/arith.hpp"
#include "sqsum/family.hpp"
#include "sqsum/format.hpp"
#include "sqsum/interval.hpp"
#include "sqsum/pell.hpp"
#include "sqsum/search.hpp"

namespace {

using namespace sqsum;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStrict = 2;

struct Options {
  std::string format = "csv";
  std::string out_file;
  int workers = 1;
  bool strict = false;

  OutputFormat fmt() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  }
};

// "lo..hi" (inclusive); a bare "v" means v..v.
IntRange parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    Int v(text);
    return IntRange{v, v};
  }
  return IntRange{Int(text.substr(0, pos)), Int(text.substr(pos + 2))};
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out_file.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out_file);
  if (!f) throw std::runtime_error("cannot open " + opt.out_file);
  f << payload;
}

std::string root_status_csv(const Int& j, const Int& m, const Int& k,
                            const RootStatus& rs, OutputFormat fmt) {
  std::ostringstream os;
  if (std::holds_alternative<RationalRoots>(rs)) {
    const auto& rr = std::get<RationalRoots>(rs);
    DiscHit hit{j, m, k, rr.sqrt_disc, rr.lo, rr.hi, rr.double_root};
    os << format_disc_hits({hit}, fmt);
  } else if (std::holds_alternative<IrrationalDisc>(rs)) {
    const Int& d = std::get<IrrationalDisc>(rs).disc;
    if (fmt == OutputFormat::Csv)
      os << "status,D\nirrational," << d.get_str() << '\n';
    else
      os << "{\"status\":\"irrational\",\"D\":\"" << d.get_str() << "\"}\n";
  } else {
    const Int& d = std::get<NegativeDisc>(rs).disc;
    if (fmt == OutputFormat::Csv)
      os << "status,D\nnegative," << d.get_str() << '\n';
    else
      os << "{\"status\":\"negative\",\"D\":\"" << d.get_str() << "\"}\n";
  }
  return os.str();
}

int run_normalize(const Options& opt, const std::string& left,
                  const std::string& right) {
  const IntRange l = parse_range(left), r = parse_range(right);
  const NormalizedCase nc =
      normalize(Interval{l.lo, l.hi}, Interval{r.lo, r.hi});
  std::ostringstream os;
  const bool json = opt.fmt() == OutputFormat::Json;
  if (std::holds_alternative<Canonical>(nc)) {
    const auto& c = std::get<Canonical>(nc);
    if (json)
      os << "{\"case\":\"canonical\",\"j\":\"" << c.params.j.get_str()
         << "\",\"m\":\"" << c.params.m.get_str() << "\",\"k\":\""
         << c.params.k.get_str() << "\",\"n\":\"" << c.n.get_str() << "\"}\n";
    else
      os << "case,j,m,k,n\ncanonical," << c.params.j.get_str() << ','
         << c.params.m.get_str() << ',' << c.params.k.get_str() << ','
         << c.n.get_str() << '\n';
  } else if (std::holds_alternative<Symmetric>(nc)) {
    os << (json ? "{\"case\":\"symmetric\"}\n" : "case\nsymmetric\n");
  } else {
    os << (json ? "{\"case\":\"degenerate\"}\n" : "case\ndegenerate\n");
  }
  emit(opt, os.str());
  return kExitOk;
}

int run_solve(const Options& opt, const Int& j, const Int& m, const Int& k) {
  emit(opt, root_status_csv(j, m, k, roots(CaseParams{j, m, k}), opt.fmt()));
  return kExitOk;
}

int run_verify(const Options& opt, const Int& j, const Int& m, const Int& k,
               const Int& n) {
  const VerifyResult v = verify_solution(CaseParams{j, m, k}, n);
  std::ostringstream os;
  if (opt.fmt() == OutputFormat::Json)
    os << "{\"equal\":" << (v.equal ? "true" : "false") << ",\"left\":\""
       << v.left_sum.get_str() << "\",\"right\":\"" << v.right_sum.get_str()
       << "\"}\n";
  else
    os << "equal,left,right\n"
       << (v.equal ? "true" : "false") << ',' << v.left_sum.get_str() << ','
       << v.right_sum.get_str() << '\n';
  emit(opt, os.str());
  return kExitOk;
}

int run_dostor(const Options& opt, const Int& k) {
  const DostorIdentity d = dostor(k);
  std::ostringstream os;
  if (opt.fmt() == OutputFormat::Json)
    os << "{\"k\":\"" << k.get_str() << "\",\"nPrime\":\""
       << d.n_prime.get_str() << "\",\"nSecond\":\"" << d.n_second.get_str()
       << "\",\"commonSum\":\"" << d.common_sum.get_str()
       << "\",\"closedForm\":\"" << d.closed_form.get_str() << "\"}\n";
  else
    os << "k,nPrime,nSecond,commonSum,closedForm\n"
       << k.get_str() << ',' << d.n_prime.get_str() << ','
       << d.n_second.get_str() << ',' << d.common_sum.get_str() << ','
       << d.closed_form.get_str() << '\n';
  emit(opt, os.str());
  return kExitOk;
}

int run_pell(const Options& opt, const std::string& seq, long count) {
  std::ostringstream os;
  const bool json = opt.fmt() == OutputFormat::Json;
  if (seq == "x") {
    if (!json) os << "i,x\n";
    for (long i = 0; i < count; ++i) {
      const Int x = x_at(i);
      if (json)
        os << "{\"i\":" << i << ",\"x\":\"" << x.get_str() << "\"}\n";
      else
        os << i << ',' << x.get_str() << '\n';
    }
  } else if (seq == "td") {
    if (!json) os << "i,t,d\n";
    for (long i = 0; i < count; ++i) {
      const SquareTriangular st = square_triangular(i);
      if (json)
        os << "{\"i\":" << i << ",\"t\":\"" << st.t.get_str() << "\",\"d\":\""
           << st.d.get_str() << "\"}\n";
      else
        os << i << ',' << st.t.get_str() << ',' << st.d.get_str() << '\n';
    }
  } else if (seq == "triples") {
    if (!json) os << "i,n,j,hypotenuse\n";
    for (long i = 1; i <= count; ++i) {
      const IsoscelesTriple tr = near_isosceles(i);
      if (json)
        os << "{\"i\":" << i << ",\"n\":\"" << tr.n.get_str() << "\",\"j\":\""
           << tr.j.get_str() << "\",\"hypotenuse\":\""
           << tr.hypotenuse().get_str() << "\"}\n";
      else
        os << i << ',' << tr.n.get_str() << ',' << tr.j.get_str() << ','
           << tr.hypotenuse().get_str() << '\n';
    }
  } else {
    throw CLI::ValidationError("--seq must be one of x|td|triples");
  }
  emit(opt, os.str());
  return kExitOk;
}

int run_family(const Options& opt, long i, const std::string& k_text) {
  const FamilyTriple f = i % 2 == 0 ? even_family(i / 2) : odd_family((i - 1) / 2);
  const IntPolynomial jp = j_poly(i);
  const IntPolynomial sp = pi_sqrt(i);
  std::ostringstream os;
  if (opt.fmt() == OutputFormat::Json) {
    os << "{\"i\":" << i << ",\"parity\":\""
       << (f.parity == Parity::Even ? "even" : "odd") << "\",\"ell\":" << f.ell
       << ",\"A\":" << poly_json(f.A) << ",\"B\":" << poly_json(f.B)
       << ",\"C\":" << poly_json(f.C) << ",\"j\":" << poly_json(jp)
       << ",\"sqrtPi\":" << poly_json(sp)
       << ",\"verified\":" << (verify_family(f) ? "true" : "false");
    if (!k_text.empty()) {
      const Int k(k_text);
      const FamilyRoots fr = family_roots(i, k);
      os << ",\"at\":{\"k\":\"" << k.get_str() << "\",\"j\":\""
         << jp.eval(k).get_str() << "\",\"sqrtPi\":\"" << sp.eval(k).get_str()
         << "\",\"nPrime\":\"" << fr.n_prime.get_str() << "\",\"nSecond\":\""
         << fr.n_second.get_str() << "\"}";
    }
    os << "}\n";
  } else {
    const auto poly_csv = [](const IntPolynomial& p) {
      std::string s;
      for (int t = 0; t <= p.degree(); ++t) {
        if (t) s += ' ';
        s += p.coeff(t).get_str();
      }
      return s;
    };
    os << "name,coeffs\nA," << poly_csv(f.A) << "\nB," << poly_csv(f.B)
       << "\nC," << poly_csv(f.C) << "\nj," << poly_csv(jp) << "\nsqrtPi,"
       << poly_csv(sp) << '\n';
    if (!k_text.empty()) {
      const Int k(k_text);
      const FamilyRoots fr = family_roots(i, k);
      os << "k,j,sqrtPi,nPrime,nSecond\n"
         << k.get_str() << ',' << jp.eval(k).get_str() << ','
         << sp.eval(k).get_str() << ',' << fr.n_prime.get_str() << ','
         << fr.n_second.get_str() << '\n';
    }
  }
  emit(opt, os.str());
  return kExitOk;
}

int run_table(const Options& opt, const std::string& name, long kmax,
              long imax, long rows) {
  std::ostringstream os;
  const bool json = opt.fmt() == OutputFormat::Json;
  if (name == "t1") {
    if (!json) os << "i,t,N,d\n";
    for (long i = 0; i < rows; ++i) {
      const SquareTriangular st = square_triangular(i);
      const Int n = triangular(st.t);
      if (json)
        os << "{\"i\":" << i << ",\"t\":\"" << st.t.get_str() << "\",\"N\":\""
           << n.get_str() << "\",\"d\":\"" << st.d.get_str() << "\"}\n";
      else
        os << i << ',' << st.t.get_str() << ',' << n.get_str() << ','
           << st.d.get_str() << '\n';
    }
  } else if (name == "t2") {
    const auto m = table2(kmax, imax);
    if (json) {
      for (long k = 1; k <= kmax; ++k) {
        os << "{\"k\":" << k << ",\"j\":[";
        const auto& row = m[static_cast<size_t>(k - 1)];
        for (size_t c = 0; c < row.size(); ++c)
          os << (c ? "," : "") << '"' << row[c].get_str() << '"';
        os << "]}\n";
      }
    } else {
      os << "k";
      for (long c = 0; c <= imax; ++c) os << ",j" << c;
      os << '\n';
      for (long k = 1; k <= kmax; ++k) {
        os << k;
        for (const auto& v : m[static_cast<size_t>(k - 1)])
          os << ',' << v.get_str();
        os << '\n';
      }
    }
  } else if (name == "t4") {
    const auto hits = scan_discriminant({Int(0)}, IntRange{1, 100},
                                        IntRange{1, 100}, opt.workers);
    os << format_disc_hits(hits, opt.fmt());
  } else if (name == "t5") {
    std::vector<Int> js;
    for (long j = 1; j <= 18; ++j) js.emplace_back(j);
    const auto hits = scan_discriminant(std::move(js), IntRange{1, 100},
                                        IntRange{1, 100}, opt.workers);
    os << format_disc_hits(hits, opt.fmt());
  } else {
    throw CLI::ValidationError("--name must be one of t1|t2|t4|t5");
  }
  emit(opt, os.str());
  return kExitOk;
}

int run_scan_pi(const Options& opt, const Int& kmax, const Int& smax) {
  const auto recs = scan_square_pairs(kmax, smax, opt.workers);
  emit(opt, format_square_pairs(recs, opt.fmt()));
  long exceptions = 0;
  for (const auto& r : recs)
    if (r.cls == PairClass::Exception) ++exceptions;
  if (exceptions > 0) {
    std::cerr << exceptions << " record(s) fall outside the known classes\n";
    for (const auto& r : recs)
      if (r.cls == PairClass::Exception)
        std::cerr << "  exception: k=" << r.k.get_str()
                  << " j=" << r.j.get_str() << '\n';
    if (opt.strict) return kExitStrict;
  }
  return kExitOk;
}

int run_scan_disc(const Options& opt, const std::string& j_text,
                  const std::string& m_text, const std::string& k_text) {
  const IntRange jr = parse_range(j_text);
  std::vector<Int> js;
  for (Int j = jr.lo; j <= jr.hi; ++j) js.push_back(j);
  const auto hits = scan_discriminant(std::move(js), parse_range(m_text),
                                      parse_range(k_text), opt.workers);
  emit(opt, format_disc_hits(hits, opt.fmt()));
  return kExitOk;
}

int run_type2(const Options& opt, const std::string& amax,
              const std::string& bmax, long euler_i,
              const std::string& swap_text) {
  std::ostringstream os;
  const bool json = opt.fmt() == OutputFormat::Json;
  if (!swap_text.empty()) {
    std::vector<Int> values;
    std::stringstream ss(swap_text);
    std::string item;
    while (std::getline(ss, item, ',')) values.emplace_back(item);
    const auto swapped = swap23(values);
    if (!json) os << "values\n";
    std::string joined;
    for (size_t i = 0; i < swapped.size(); ++i)
      joined += (i ? "," : "") + swapped[i].get_str();
    if (json)
      os << "{\"values\":\"" << joined << "\"}\n";
    else
      os << '"' << joined << "\"\n";
  } else if (euler_i > 0) {
    const EulerType2 e = type2_from_euler(euler_i);
    if (json)
      os << "{\"a\":\"" << e.a.get_str() << "\",\"b\":\"" << e.b.get_str()
         << "\",\"root\":\"" << e.root.get_str() << "\"}\n";
    else
      os << "a,b,root\n"
         << e.a.get_str() << ',' << e.b.get_str() << ',' << e.root.get_str()
         << '\n';
  } else {
    if (amax.empty() || bmax.empty())
      throw CLI::ValidationError("type2 needs --amax/--bmax, --euler or --swap");
    os << format_type2(type2_scan(Int(amax), Int(bmax)), opt.fmt());
  }
  emit(opt, os.str());
  return kExitOk;
}

int run_sratio(const Options& opt, const Int& n, bool exclude_diagonal) {
  const SRatio s = s_ratio(n, exclude_diagonal);
  std::ostringstream os;
  if (opt.fmt() == OutputFormat::Json)
    os << "{\"N\":\"" << n.get_str() << "\",\"S\":\"" << s.count.get_str()
       << "\",\"ratio\":\"" << s.ratio.get_str() << "\"}\n";
  else
    os << "N,S,ratio\n"
       << n.get_str() << ',' << s.count.get_str() << ',' << s.ratio.get_str()
       << '\n';
  emit(opt, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search and verification of equal sums of consecutive squares"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_file, "Write output to FILE instead of stdout");
  app.add_option("--workers", opt.workers, "Worker threads for scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--strict", opt.strict,
               "Exit 2 when a scan finds records outside the known classes");

  std::string left, right;
  auto* cmd_norm = app.add_subcommand(
      "normalize", "Reduce two intervals to canonical (j,m,k,n) shape");
  cmd_norm->add_option("--left", left, "Left interval lo..hi")->required();
  cmd_norm->add_option("--right", right, "Right interval lo..hi")->required();

  std::string j_s, m_s, k_s, n_s;
  auto* cmd_solve =
      app.add_subcommand("solve", "Exact roots of the quadratic for (j,m,k)");
  cmd_solve->add_option("--j", j_s)->required();
  cmd_solve->add_option("--m", m_s)->required();
  cmd_solve->add_option("--k", k_s)->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "Check the interval identity at (j,m,k,n) by summation");
  cmd_verify->add_option("--j", j_s)->required();
  cmd_verify->add_option("--m", m_s)->required();
  cmd_verify->add_option("--k", k_s)->required();
  cmd_verify->add_option("--n", n_s)->required();

  auto* cmd_dostor =
      app.add_subcommand("dostor", "The adjacent equal-length identity for k");
  cmd_dostor->add_option("--k", k_s)->required();

  std::string seq = "x";
  long count = 10;
  auto* cmd_pell = app.add_subcommand(
      "pell", "Pell-adjacent sequences and near-isosceles triples");
  cmd_pell->add_option("--seq", seq, "x | td | triples")
      ->capture_default_str();
  cmd_pell->add_option("--count", count)->check(CLI::PositiveNumber)
      ->capture_default_str();

  long fam_i = 1;
  std::string fam_k;
  auto* cmd_family = app.add_subcommand(
      "family", "Polynomial family (A_i, B_i, C_i) and j_i");
  cmd_family->add_option("--i", fam_i, "Family index (>= 1)")
      ->check(CLI::PositiveNumber)
      ->required();
  cmd_family->add_option("--k", fam_k, "Also evaluate at this k");

  std::string table_name;
  long kmax = 8, imax = 8, rows = 6;
  auto* cmd_table =
      app.add_subcommand("table", "Reference tables (t1|t2|t4|t5)");
  cmd_table->add_option("--name", table_name)->required();
  cmd_table->add_option("--kmax", kmax)->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_table->add_option("--imax", imax)->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_table->add_option("--rows", rows)->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string pi_kmax, pi_smax;
  auto* cmd_scan_pi = app.add_subcommand(
      "scan-pi", "Scan for square quadratic pairs (k,j), classified");
  cmd_scan_pi->add_option("--kmax", pi_kmax)->required();
  cmd_scan_pi->add_option("--smax", pi_smax, "Bound on k+j")->required();

  std::string dj = "0..0", dm = "1..100", dk = "1..100";
  auto* cmd_scan_disc = app.add_subcommand(
      "scan-disc", "Scan the (j,m,k) grid for perfect-square discriminants");
  cmd_scan_disc->add_option("--j", dj, "Range lo..hi")->capture_default_str();
  cmd_scan_disc->add_option("--m", dm, "Range lo..hi")->capture_default_str();
  cmd_scan_disc->add_option("--k", dk, "Range lo..hi")->capture_default_str();

  std::string t2_amax, t2_bmax, t2_swap;
  long t2_euler = 0;
  auto* cmd_type2 = app.add_subcommand(
      "type2", "Products k1(k1+1)k2(k2+1) that are twice a square");
  cmd_type2->add_option("--amax", t2_amax);
  cmd_type2->add_option("--bmax", t2_bmax);
  cmd_type2->add_option("--euler", t2_euler,
                        "Generate from the i-th square triangular solution");
  cmd_type2->add_option("--swap", t2_swap,
                        "Comma-separated vector; toggles 2 <-> 3");

  std::string sr_n;
  bool sr_exclude = false;
  auto* cmd_sratio = app.add_subcommand(
      "sratio", "Count pairs (a,b) <= N with a(a+1)b(b+1) a perfect square");
  cmd_sratio->add_option("--N", sr_n)->required();
  cmd_sratio->add_flag("--exclude-diagonal", sr_exclude);

  // Let --format/--out/--workers/--strict appear after the subcommand too.
  for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_norm->parsed()) return run_normalize(opt, left, right);
    if (cmd_solve->parsed()) return run_solve(opt, Int(j_s), Int(m_s), Int(k_s));
    if (cmd_verify->parsed())
      return run_verify(opt, Int(j_s), Int(m_s), Int(k_s), Int(n_s));
    if (cmd_dostor->parsed()) return run_dostor(opt, Int(k_s));
    if (cmd_pell->parsed()) return run_pell(opt, seq, count);
    if (cmd_family->parsed()) return run_family(opt, fam_i, fam_k);
    if (cmd_table->parsed()) return run_table(opt, table_name, kmax, imax, rows);
    if (cmd_scan_pi->parsed())
      return run_scan_pi(opt, Int(pi_kmax), Int(pi_smax));
    if (cmd_scan_disc->parsed()) return run_scan_disc(opt, dj, dm, dk);
    if (cmd_type2->parsed())
      return run_type2(opt, t2_amax, t2_bmax, t2_euler, t2_swap);
    if (cmd_sratio->parsed()) return run_sratio(opt, Int(sr_n), sr_exclude);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
