#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "padelin/certify.hpp"
#include "padelin/report.hpp"
#include "padelin/zeta.hpp"

using namespace padelin;

namespace {

struct Common {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + common.output + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json header(const char* command, Json config) {
  return Json{{"schema", kReportSchema}, {"command", command}, {"config", std::move(config)}};
}

Rational parse_point(const std::string& text) { return Rational::parse(text); }

void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

long valuation_of(const Rational& x, long p) {
  if (is_zero(x)) throw std::domain_error("x must be nonzero");
  return padelin::valuation(x, p);
}

std::string fmt_double(double v, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

struct ZetaArgs {
  long p = 5, s = 2, N = 20, guard = 4;
  std::string x;
};

int run_zeta(const Common& common, const ZetaArgs& a) {
  require_prime(a.p);
  Rational x = parse_point(a.x);
  if (valuation_of(x, a.p) >= 0)
    throw std::domain_error("zeta needs |x|_p > 1, got v_p(x) = " + std::to_string(padelin::valuation(x, a.p)));
  PrecisionContext ctx(a.p, a.N, a.guard);
  PAdic px = PAdic::exact(x, a.p, a.N + a.guard + 16);
  PAdic value = a.s >= 2 ? zeta_p(a.s, px, ctx) : a.s == 1 ? zeta_p_one(px, ctx) : zeta_p_negative(1 - a.s, px);
  if (a.s <= 0) value = value.with_precision(value.is_zero() ? a.N : std::min(value.precision(), value.valuation() + a.N));
  Json config{{"p", a.p}, {"s", a.s}, {"x", x.str()}, {"N", a.N}, {"guard", a.guard}};
  if (common.format == "json") {
    Json j = header("zeta", config);
    j["value"] = to_json(value);
    j["text"] = value.str();
    emit(common, dump(j));
  } else {
    emit(common, value.str() + "\n");
  }
  return 0;
}

struct TpArgs {
  long p = 5, s = 2, e = 2, N = 20, guard = 4;
  std::string x;
  std::string method = "direct";
};

int run_tp(const Common& common, const TpArgs& a) {
  require_prime(a.p);
  if (a.s < 1) throw std::invalid_argument("s must be >= 1");
  if (a.e < 2) throw std::invalid_argument("e must be >= 2");
  if (std::gcd(a.e, a.p) != 1) throw std::invalid_argument("e must be prime to p");
  Rational x = parse_point(a.x);
  if (valuation_of(x, a.p) >= 0) throw std::domain_error("tp needs |x|_p >= p");
  PrecisionContext ctx(a.p, a.N, a.guard);
  auto field = UnramifiedExtension::make(a.e, a.p, 2 * a.N + 64);
  PAdic px = PAdic::exact(x, a.p, a.N + a.guard + 16);
  PAdicExt value = a.method == "series"  ? t_p_series(a.s, px, field, ctx)
                   : a.method == "tilde" ? ttilde_p(a.s, px, field, ctx)
                                         : t_p(a.s, px, field, ctx);
  Json config{{"p", a.p}, {"s", a.s}, {"e", a.e}, {"x", x.str()}, {"N", a.N}, {"guard", a.guard}, {"method", a.method}};
  if (common.format == "json") {
    Json j = header("tp", config);
    j["value"] = to_json(value);
    j["text"] = value.str();
    emit(common, dump(j));
  } else {
    emit(common, value.str() + "\n");
  }
  return 0;
}

struct PadeArgs {
  long n = 3, A = 2, q = 0, e = 0;
};

int run_pade(const Common& common, const PadeArgs& a) {
  auto sys = build_pade(a.n, a.A, a.q);
  if (common.format == "json") {
    Json j = header("pade", Json{{"n", a.n}, {"A", a.A}, {"q", a.q}, {"e", a.e}});
    j["system"] = to_json(sys);
    if (a.e >= 2) {
      Json at = Json::array();
      for (long s = 0; s <= a.A; ++s) {
        Json coeffs = Json::array();
        const auto poly = at_root(sys.P[s], a.e);
        for (const auto& c : poly.coeffs()) coeffs.push_back(to_json(c));
        at.push_back(Json{{"s", s}, {"coeffs", coeffs}});
      }
      j["atRoot"] = at;
    }
    emit(common, dump(j));
    return 0;
  }
  if (common.format == "csv") {
    std::ostringstream os;
    os << "s,degX,degZ,coefficient\n";
    for (long s = 0; s <= a.A; ++s)
      for (const auto& [m, c] : sys.P[s].terms()) os << s << "," << m.x << "," << m.z << "," << c << "\n";
    emit(common, os.str());
    return 0;
  }
  std::ostringstream os;
  os << "n=" << a.n << " A=" << a.A << " q=" << a.q << "\n";
  for (long s = 0; s <= a.A; ++s)
    os << "P_" << s << ": " << sys.P[s].terms().size() << " terms, deg_x " << sys.P[s].deg_x() << ", deg_z "
       << sys.P[s].deg_z() << "\n";
  if (a.e >= 2)
    for (long s = 0; s <= a.A; ++s) {
      os << "P_" << s << "(x, xi_" << a.e << "):";
      const auto poly = at_root(sys.P[s], a.e);
      for (const auto& c : poly.coeffs()) os << " " << c.str();
      os << "\n";
    }
  emit(common, os.str());
  return 0;
}

struct CertifyArgs {
  std::string fault = "none";
  std::string manifest;
  long precision = 64;
  long guard = 4;
  std::size_t cases = 50;
};

int run_certify(const Common& common, const CertifyArgs& a) {
  SuiteConfig config = SuiteConfig::defaults();
  config.fault = parse_fault_target(a.fault);
  config.seed = common.seed;
  config.threads = common.threads;
  config.precision = a.precision;
  config.guard = a.guard;
  config.integrality_cases = a.cases;
  config.max_precision = max_precision_from_env();
  auto result = run_certify_suite(config);
  if (common.format == "csv")
    emit(common, decay_csv(result));
  else if (common.format == "json")
    emit(common, dump(result.bundle));
  else {
    std::ostringstream os;
    os << "determinant certificates: " << result.bundle["determinants"].size() << "\n"
       << "remainder checks: " << result.bundle["remainders"].size() << "\n"
       << "integrality cases: " << result.bundle["integrality"].size() << "\n"
       << "decay rows: " << result.decay.size() << "\n"
       << (result.ok ? "all certificates verified" : "FAILED " + result.first_failure) << "\n";
    emit(common, os.str());
  }
  if (!a.manifest.empty()) {
    std::ofstream out(a.manifest, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open manifest file '" + a.manifest + "'");
    out << dump(result.manifest);
  }
  if (!result.ok) {
    std::cerr << "padelin: certificate falsified: " << result.first_failure << "\n";
    return 1;
  }
  return 0;
}

struct BoundArgs {
  long p = 0, A = 2, e = 2;
  std::string x;
  std::string variant = "proposition";
  bool trust = false;
};

int run_bound(const Common& common, const BoundArgs& a) {
  require_prime(a.p);
  Rational x = parse_point(a.x);
  if (valuation_of(x, a.p) >= 0) throw std::domain_error("bound needs |x|_p >= p");
  if (a.e < 2 || std::gcd(a.e, a.p) != 1) throw std::invalid_argument("e must be >= 2 and prime to p");
  if (!x.num().fits_slong_p() || !x.den().fits_slong_p()) throw std::invalid_argument("x out of range");
  BoundVariant variant;
  if (a.variant == "proposition")
    variant = BoundVariant::proposition;
  else if (a.variant == "theorem1")
    variant = BoundVariant::theorem1;
  else
    throw std::invalid_argument("unknown variant '" + a.variant + "'");
  std::vector<DeterminantCertificate> certs;
  if (!a.trust) {
    long n = 1;
    while ((a.A - 1) * n < 3) ++n;
    certs.push_back(determinant_certificate(n, a.A));
    if (!certs.back().verified) {
      std::cerr << "padelin: certificate falsified: " << certs.back().failure << "\n";
      return 1;
    }
  }
  auto rep = dimension_bound(x.num().get_si(), x.den().get_si(), a.p, a.e, a.A, variant, certs, a.trust);
  if (common.format == "json") {
    Json j = header("bound", Json{{"p", a.p}, {"A", a.A}, {"e", a.e}, {"x", x.str()}, {"variant", a.variant},
                                  {"trust", a.trust}});
    j["bound"] = to_json(rep);
    if (!certs.empty()) j["certificate"] = to_json(certs.front());
    emit(common, dump(j));
  } else if (common.format == "csv") {
    emit(common, "p,A,e,x,variant,tau,dimension_at_least\n" + std::to_string(a.p) + "," + std::to_string(a.A) + "," +
                     std::to_string(a.e) + "," + x.str() + "," + a.variant + "," +
                     fmt_double(rep.tau_lower_bound, 10) + "," + std::to_string(rep.dimension_at_least) + "\n");
  } else {
    emit(common, "tau >= " + fmt_double(rep.tau_lower_bound) + " (c = " + fmt_double(rep.c) + ", rho = " +
                     fmt_double(rep.rho) + "); dimension >= " + std::to_string(rep.dimension_at_least) +
                     (rep.trusted ? " [trusted, uncertified]" : "") + "\n");
  }
  return 0;
}

struct ScanArgs {
  long A = 2, p_max = 100;
};

int run_scan(const Common& common, const ScanArgs& a) {
  if (a.A < 2) throw std::invalid_argument("A must be >= 2");
  if (a.p_max < 3) throw std::invalid_argument("pmax must be >= 3");
  auto rep = theorem2_scan(a.A, a.p_max);
  auto bracket = theorem2_bracket(a.A);
  if (common.format == "json") {
    Json j = header("scan", Json{{"A", a.A}, {"pMax", a.p_max}});
    j["scan"] = to_json(rep);
    j["bracket"] = Json{{"logRoot", bracket.log_root}, {"threshold", bracket.threshold}};
    emit(common, dump(j));
    return 0;
  }
  std::ostringstream os;
  if (common.format == "csv") {
    os << "p,bound\n";
    for (const auto& r : rep.rows) os << r.p << "," << std::setprecision(10) << r.bound << "\n";
    emit(common, os.str());
    return 0;
  }
  for (const auto& r : rep.rows) os << std::setw(8) << r.p << "  " << std::fixed << std::setprecision(6) << r.bound << "\n";
  os << "M_" << a.A << " = " << (rep.threshold ? std::to_string(*rep.threshold) : "none below pmax")
     << " (bracket: ln p > " << std::setprecision(6) << bracket.log_root << ", p = " << bracket.threshold << ")\n";
  emit(common, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic Hurwitz zeta values, Pade approximants and certificates"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", common.output, "Write the report to a file");
  app.add_option("--seed", common.seed, "Seed for randomized audits")->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads (0: all cores)")->capture_default_str();

  ZetaArgs zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "p-adic Hurwitz zeta value");
  zeta_cmd->add_option("-p", zeta.p, "Prime")->required();
  zeta_cmd->add_option("-s", zeta.s, "Integer argument")->required();
  zeta_cmd->add_option("-x", zeta.x, "Point as num/den")->required();
  zeta_cmd->add_option("-N,--precision", zeta.N, "Digits")->capture_default_str();
  zeta_cmd->add_option("--guard", zeta.guard, "Guard digits")->capture_default_str();

  TpArgs tp;
  auto* tp_cmd = app.add_subcommand("tp", "Twisted sum of p-adic Hurwitz zeta values");
  tp_cmd->add_option("-p", tp.p, "Prime")->required();
  tp_cmd->add_option("-s", tp.s, "Positive integer argument")->required();
  tp_cmd->add_option("-x", tp.x, "Point as num/den")->required();
  tp_cmd->add_option("-e", tp.e, "Root of unity order")->capture_default_str();
  tp_cmd->add_option("-N,--precision", tp.N, "Digits")->capture_default_str();
  tp_cmd->add_option("--guard", tp.guard, "Guard digits")->capture_default_str();
  tp_cmd->add_option("--method", tp.method, "direct, series or tilde")
      ->check(CLI::IsMember({"direct", "series", "tilde"}))
      ->capture_default_str();

  PadeArgs pade;
  auto* pade_cmd = app.add_subcommand("pade", "Build the approximation polynomials");
  pade_cmd->add_option("-n", pade.n, "Order")->required();
  pade_cmd->add_option("-A", pade.A, "Number of zeta values")->required();
  pade_cmd->add_option("-q", pade.q, "System index")->capture_default_str();
  pade_cmd->add_option("-e", pade.e, "Also evaluate at a primitive e-th root of unity");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Run the certificate suite");
  certify_cmd->add_option("--inject-fault", certify.fault, "Perturb one check: determinant, integrality, remainder")
      ->check(CLI::IsMember({"none", "determinant", "integrality", "remainder"}))
      ->capture_default_str();
  certify_cmd->add_option("--manifest", certify.manifest, "Write the reproducibility manifest");
  certify_cmd->add_option("-N,--precision", certify.precision, "Starting precision for linear forms")
      ->capture_default_str();
  certify_cmd->add_option("--guard", certify.guard, "Guard digits")->capture_default_str();
  certify_cmd->add_option("--cases", certify.cases, "Random integrality cases")->capture_default_str();

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Lower bound on the dimension of the spanned space");
  bound_cmd->add_option("-p", bound.p, "Prime")->required();
  bound_cmd->add_option("-A", bound.A, "Number of zeta values")->required();
  bound_cmd->add_option("-e", bound.e, "Root of unity order")->capture_default_str();
  bound_cmd->add_option("-x", bound.x, "Point as num/den")->required();
  bound_cmd->add_option("--variant", bound.variant, "proposition or theorem1")
      ->check(CLI::IsMember({"proposition", "theorem1"}))
      ->capture_default_str();
  bound_cmd->add_flag("--trust", bound.trust, "Skip the determinant certificate");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Least prime beyond which the bound exceeds A - 1");
  scan_cmd->add_option("-A", scan.A, "Number of zeta values")->required();
  scan_cmd->add_option("--pmax", scan.p_max, "Largest prime scanned")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*zeta_cmd) return run_zeta(common, zeta);
    if (*tp_cmd) return run_tp(common, tp);
    if (*pade_cmd) return run_pade(common, pade);
    if (*certify_cmd) return run_certify(common, certify);
    if (*bound_cmd) return run_bound(common, bound);
    if (*scan_cmd) return run_scan(common, scan);
  } catch (const std::invalid_argument& e) {
    std::cerr << "padelin: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "padelin: domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "padelin: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "padelin: precision exhausted: " << e.what() << "\n";
    return 1;
  } catch (const UncertifiedBound& e) {
    std::cerr << "padelin: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "padelin: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
