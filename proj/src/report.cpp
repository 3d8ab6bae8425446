#include "padelin/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "padelin/combinatorics.hpp"

namespace padelin {

Json to_json(const Rational& r) { return Json::array({r.num().get_str(), r.den().get_str()}); }

Json to_json(const CycloElement& v) {
  Json coords = Json::array();
  for (const auto& c : v.coeffs()) coords.push_back(c.str());
  return Json{{"e", v.order()}, {"coords", coords}};
}

Json to_json(const PAdic& v) {
  Json out;
  out["p"] = v.prime();
  if (v.is_zero())
    out["valuation"] = "+inf";
  else
    out["valuation"] = v.valuation();
  out["unitDigits"] = v.unit_digits();
  out["knownPrecision"] = v.precision();
  return out;
}

namespace {

std::vector<long> integer_digits(Integer v, long p, long count) {
  std::vector<long> out;
  Integer q;
  for (long i = 0; i < count; ++i) {
    out.push_back(static_cast<long>(mpz_fdiv_q_ui(q.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p))));
    v = q;
  }
  return out;
}

}  // namespace

Json to_json(const PAdicExt& v) {
  const auto& field = *v.field();
  long digits = std::clamp(v.precision(), 1L, field.precision());
  Json modulus = Json::array();
  for (const auto& c : field.modulus()) modulus.push_back(integer_digits(c, field.prime(), digits));
  Json coords = Json::array();
  for (const auto& c : v.coords()) coords.push_back(to_json(c));
  Json out;
  out["p"] = field.prime();
  out["e"] = field.order();
  out["degree"] = field.degree();
  out["valuation"] = v.is_zero() ? Json("+inf") : Json(v.valuation());
  out["knownPrecision"] = v.precision();
  out["modulusDigits"] = modulus;
  out["coords"] = coords;
  return out;
}

Json to_json(const PadeSystem& sys) {
  Json polys = Json::array();
  for (long s = 0; s <= sys.A; ++s) {
    Json terms = Json::array();
    for (const auto& [m, c] : sys.P[s].terms())
      terms.push_back(Json::array({m.x, m.z, c.num().get_str(), c.den().get_str()}));
    polys.push_back(Json{{"s", s},
                         {"degX", sys.P[s].deg_x()},
                         {"degZ", sys.P[s].deg_z()},
                         {"terms", terms}});
  }
  return Json{{"n", sys.n}, {"A", sys.A}, {"q", sys.q}, {"P", polys}};
}

Json to_json(const DeterminantCertificate& c) {
  Json out{{"n", c.n}, {"A", c.A}, {"verified", c.verified}, {"methodsAgree", c.methods_agree}};
  out["gamma"] = c.verified ? Json{{"numerator", c.gamma.num().get_str()}, {"denominator", c.gamma.den().get_str()}}
                            : Json(nullptr);
  out["degreeReport"] = Json{{"degX", c.deg_x}, {"degZ", c.deg_z}};
  out["shape"] = Json{{"xPower", c.A}, {"zPower", c.n + 1}, {"zMinusOnePower", (c.A - 1) * c.n - 2}};
  if (!c.verified) out["failure"] = c.failure;
  return out;
}

Json to_json(const IntegralityReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"statement", f.statement}, {"s", f.s}, {"where", f.where}});
  return Json{{"n", r.n}, {"A", r.A}, {"q", r.q}, {"a", r.a}, {"b", r.b}, {"p", r.p},
              {"e", r.e}, {"passed", r.passed}, {"failures", failures}};
}

Json to_json(const LinearFormValue& v) {
  return Json{{"n", v.n},
              {"A", v.A},
              {"q", v.q},
              {"x", Rational(Integer(v.a), Integer(v.b)).str()},
              {"p", v.p},
              {"e", v.e},
              {"valuation", v.valuation},
              {"workingPrecision", v.working_precision},
              {"normalizers",
               Json{{"b", v.b_factor.get_str()}, {"mu", v.mu_factor.get_str()}, {"dnPowerA", v.dn_power.get_str()}}},
              {"value", to_json(v.value)}};
}

const char* to_string(BoundVariant v) { return v == BoundVariant::proposition ? "proposition" : "theorem1"; }

Json to_json(const BoundReport& r) {
  return Json{{"a", r.a},
              {"b", r.b},
              {"p", r.p},
              {"e", r.e},
              {"A", r.A},
              {"variant", to_string(r.variant)},
              {"extDegree", r.ext_degree},
              {"fieldDegree", r.field_degree},
              {"cBound", r.c},
              {"rhoBound", r.rho},
              {"tauLowerBound", r.tau_lower_bound},
              {"dimensionAtLeast", r.dimension_at_least},
              {"trusted", r.trusted}};
}

Json to_json(const ScanReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(Json{{"p", row.p}, {"bound", row.bound}});
  return Json{{"A", r.A},
              {"pMax", r.p_max},
              {"threshold", r.threshold ? Json(*r.threshold) : Json(nullptr)},
              {"rows", rows}};
}

Json to_json(const SlopeReport& r) {
  Json pts = Json::array();
  for (const auto& pt : r.points) pts.push_back(Json{{"n", pt.n}, {"slope", pt.slope}});
  return Json{{"A", r.A}, {"q", r.q}, {"e", r.e}, {"x0", r.x0.str()}, {"cap", r.cap}, {"cBound", r.c}, {"points", pts}};
}

FaultTarget parse_fault_target(const std::string& name) {
  if (name == "none") return FaultTarget::none;
  if (name == "determinant") return FaultTarget::determinant;
  if (name == "integrality") return FaultTarget::integrality;
  if (name == "remainder") return FaultTarget::remainder;
  throw std::invalid_argument("unknown fault target '" + name + "'");
}

const char* to_string(FaultTarget t) {
  switch (t) {
    case FaultTarget::none: return "none";
    case FaultTarget::determinant: return "determinant";
    case FaultTarget::integrality: return "integrality";
    case FaultTarget::remainder: return "remainder";
  }
  return "none";
}

std::vector<IntegralityCase> random_integrality_cases(std::uint64_t seed, std::size_t count) {
  static constexpr long primes[] = {2, 3, 5, 7, 13};
  std::mt19937_64 rng(seed);
  auto pick = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<IntegralityCase> out;
  while (out.size() < count) {
    IntegralityCase c;
    c.A = pick(2, 3);
    c.n = pick(c.A == 2 ? 3 : 2, 20);
    c.q = pick(0, c.A);
    c.b = pick(1, 50);
    c.a = pick(-60, 60);
    c.p = primes[pick(0, 4)];
    c.e = pick(2, 6);
    if (c.a == 0 || std::gcd(c.a, c.b) != 1 || std::gcd(c.e, c.p) != 1) continue;
    out.push_back(c);
  }
  return out;
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig c;
  for (long n = 3; n <= 8; ++n) c.determinant_grid.emplace_back(2, n);
  for (long n = 2; n <= 5; ++n) c.determinant_grid.emplace_back(3, n);
  return c;
}

long decay_threshold(long A, long n, long w) { return A * n * w - 8; }

Json to_json(const SuiteConfig& c) {
  Json grid = Json::array();
  for (const auto& [A, n] : c.determinant_grid) grid.push_back(Json{{"A", A}, {"n", n}});
  return Json{{"determinantGrid", grid},
              {"remainderOrders", c.remainder_orders},
              {"remainderTruncation", "A*n+" + std::to_string(c.remainder_extra)},
              {"integralityCases", c.integrality_cases},
              {"seed", c.seed},
              {"decay",
               Json{{"p", c.decay_p},
                    {"e", c.decay_e},
                    {"x", Rational(Integer(c.decay_a), Integer(c.decay_b)).str()},
                    {"A", c.decay_A},
                    {"q", c.decay_q},
                    {"nMin", c.decay_n_min},
                    {"nMax", c.decay_n_max}}},
              {"precision", c.precision},
              {"guard", c.guard},
              {"maxPrecision", c.max_precision},
              {"injectFault", to_string(c.fault)}};
}

namespace {

struct TaskOutcome {
  Json entry;
  bool ok = true;
  std::string failure;
};

template <class Fn>
std::vector<TaskOutcome> run_pool(std::size_t count, unsigned threads, Fn fn) {
  std::vector<TaskOutcome> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (const std::exception& ex) {
        out[i].ok = false;
        out[i].failure = ex.what();
        out[i].entry = Json{{"error", ex.what()}};
      }
    }
  };
  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

void collect(SuiteResult& result, const char* section, const std::vector<TaskOutcome>& outcomes) {
  Json arr = Json::array();
  for (const auto& o : outcomes) {
    arr.push_back(o.entry);
    if (!o.ok && result.ok) {
      result.ok = false;
      result.first_failure = std::string(section) + ": " + o.failure;
    }
  }
  result.bundle[section] = arr;
}

}  // namespace

SuiteResult run_certify_suite(const SuiteConfig& config) {
  SuiteResult result;
  result.bundle["schema"] = kReportSchema;
  result.bundle["command"] = "certify";
  result.bundle["config"] = to_json(config);

  const auto& grid = config.determinant_grid;
  auto dets = run_pool(grid.size(), config.threads, [&](std::size_t i) {
    auto [A, n] = grid[i];
    bool fault = config.fault == FaultTarget::determinant && i == 0;
    auto cert = determinant_certificate(n, A, fault);
    TaskOutcome o{to_json(cert), cert.verified, ""};
    if (!cert.verified) o.failure = "determinant (A=" + std::to_string(A) + ", n=" + std::to_string(n) + "): " + cert.failure;
    return o;
  });
  collect(result, "determinants", dets);

  struct RemainderTask {
    long A, n, q, e;
  };
  std::vector<RemainderTask> rtasks;
  for (auto [A, n] : grid)
    for (long q = 0; q <= A; ++q)
      for (long e : config.remainder_orders) rtasks.push_back({A, n, q, e});
  auto rems = run_pool(rtasks.size(), config.threads, [&](std::size_t i) {
    const auto& t = rtasks[i];
    auto sys = build_pade(t.n, t.A, t.q);
    if (config.fault == FaultTarget::remainder && i == 0) sys.P[0].add_term(Rational(1), 1, 1);
    const long K = t.A * t.n + config.remainder_extra;
    Json entry{{"A", t.A}, {"n", t.n}, {"q", t.q}, {"e", t.e}, {"truncation", K}};
    entry["vanishingBound"] = t.A * (t.n - 1) - 3;
    auto rs = remainder_series(sys, t.e, K);
    long first = rs.first_nonzero();
    entry["firstNonzero"] = first;
    bool ok = first <= K && first >= rs.vanishing_bound();
    entry["passed"] = ok;
    TaskOutcome o{entry, ok, ""};
    if (!ok) o.failure = "no nonzero coefficient up to the truncation order";
    return o;
  });
  collect(result, "remainders", rems);

  auto cases = random_integrality_cases(config.seed, config.integrality_cases);
  auto ints = run_pool(cases.size(), config.threads, [&](std::size_t i) {
    const auto& c = cases[i];
    auto sys = build_pade(c.n, c.A, c.q);
    if (config.fault == FaultTarget::integrality && i == 0)
      sys.P[1].add_term(Rational(Integer(1), prime_power(c.p, 64)), 0, 0);
    auto rep = integrality_audit(sys, c.a, c.b, c.p, c.e);
    Json entry = to_json(rep);
    bool aritmu_ok = true;
    for (long k = 0; k <= c.n; ++k) {
      if (c.a + k * c.b == 0) continue;
      auto ar = aritmu_check(c.a, c.b, c.n, k);
      aritmu_ok = aritmu_ok && ar.is_int1 && ar.is_int2;
    }
    entry["aritmu"] = aritmu_ok;
    TaskOutcome o{entry, rep.passed && aritmu_ok, ""};
    if (!rep.passed)
      o.failure = "statement " + std::to_string(rep.failures.front().statement) + " (n=" + std::to_string(c.n) +
                  ", A=" + std::to_string(c.A) + ", q=" + std::to_string(c.q) + ", x=" + std::to_string(c.a) + "/" +
                  std::to_string(c.b) + ", p=" + std::to_string(c.p) + "): " + rep.failures.front().where;
    else if (!aritmu_ok)
      o.failure = "arithmetic lemma failed";
    return o;
  });
  collect(result, "integrality", ints);

  struct DecayTask {
    long q, n;
  };
  std::vector<DecayTask> dtasks;
  for (long q : config.decay_q)
    for (long n = config.decay_n_min; n <= config.decay_n_max; ++n) dtasks.push_back({q, n});
  const long w = -valuation(Rational(Integer(config.decay_a), Integer(config.decay_b)), config.decay_p);
  std::vector<DecayRow> rows(dtasks.size());
  auto decays = run_pool(dtasks.size(), config.threads, [&](std::size_t i) {
    const auto& t = dtasks[i];
    auto sys = build_pade(t.n, config.decay_A, t.q);
    auto direct = linear_form(sys, config.decay_a, config.decay_b, config.decay_p, config.decay_e, config.precision,
                              config.guard, config.max_precision);
    auto series = linear_form_from_series(sys, config.decay_a, config.decay_b, config.decay_p, config.decay_e,
                                          direct.value.precision());
    DecayRow row;
    row.q = t.q;
    row.n = t.n;
    row.valuation = direct.valuation;
    row.threshold = decay_threshold(config.decay_A, t.n, w);
    row.working_precision = direct.working_precision;
    row.series_agrees = direct.value.agrees_with(series.value);
    row.coefficient_bound = series.coefficient_bound_holds;
    row.passed = row.valuation >= row.threshold && row.series_agrees && row.coefficient_bound;
    rows[i] = row;
    Json entry{{"q", t.q},
               {"n", t.n},
               {"valuation", row.valuation},
               {"threshold", row.threshold},
               {"workingPrecision", row.working_precision},
               {"seriesTerms", series.terms},
               {"seriesAgrees", row.series_agrees},
               {"coefficientBound", row.coefficient_bound},
               {"passed", row.passed}};
    TaskOutcome o{entry, row.passed, ""};
    if (!row.passed) o.failure = "linear form (q=" + std::to_string(t.q) + ", n=" + std::to_string(t.n) + ")";
    return o;
  });
  collect(result, "decay", decays);
  result.decay = rows;

  result.bundle["status"] = Json{{"ok", result.ok}, {"firstFailure", result.first_failure}};
  result.manifest = Json{{"schema", kReportSchema},
                         {"command", "certify"},
                         {"p", config.decay_p},
                         {"N", config.precision},
                         {"grid", result.bundle["config"]["determinantGrid"]},
                         {"seed", config.seed}};
  return result;
}

std::string decay_csv(const SuiteResult& result) {
  std::ostringstream os;
  os << "q,n,valuation,threshold,series_agrees,passed\n";
  for (const auto& r : result.decay)
    os << r.q << "," << r.n << "," << r.valuation << "," << r.threshold << "," << (r.series_agrees ? 1 : 0) << ","
       << (r.passed ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace padelin
