#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "padelin/certify.hpp"
#include "padelin/combinatorics.hpp"
#include "padelin/report.hpp"
#include "padelin/zeta.hpp"

using namespace padelin;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<long, long>> kGrid = {{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}};

template <class Fn>
void parallel_for(std::size_t count, Fn fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n && t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

Verdict determinant_factorization() {
  std::vector<DeterminantCertificate> certs(kGrid.size());
  for (std::size_t i = 0; i < kGrid.size(); ++i) certs[i] = determinant_certificate(kGrid[i].second, kGrid[i].first);
  Verdict v;
  std::ostringstream os;
  for (const auto& c : certs) {
    bool ok = c.verified && c.methods_agree && !is_zero(c.gamma) && c.seconds < 60;
    v.pass = v.pass && ok;
    os << "(A=" << c.A << ",n=" << c.n << " " << std::fixed << std::setprecision(2) << c.seconds << "s"
       << (ok ? "" : " " + c.failure) << ") ";
  }
  v.detail = os.str();
  return v;
}

Verdict remainder_vanishing() {
  struct Case {
    long A, n, q, e;
  };
  std::vector<Case> cases;
  for (auto [A, n] : kGrid)
    for (long q = 0; q <= A; ++q)
      for (long e : {2L, 3L}) cases.push_back({A, n, q, e});
  std::vector<std::string> errors(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    try {
      auto rs = remainder_series(build_pade(c.n, c.A, c.q), c.e, c.A * c.n + 10);
      const long bound = c.A * (c.n - 1) - 3;
      for (long k = -c.n; k < bound; ++k)
        if (!rs.at(k).is_zero()) errors[i] = "u_" + std::to_string(k) + " nonzero";
      bool some = false;
      for (long k = bound; k <= rs.truncation; ++k) some = some || !rs.at(k).is_zero();
      if (!some) errors[i] = "no nonzero coefficient";
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  });
  Verdict v;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!errors[i].empty()) {
      v.pass = false;
      v.detail += "(A=" + std::to_string(cases[i].A) + ",n=" + std::to_string(cases[i].n) + ",q=" +
                  std::to_string(cases[i].q) + ",e=" + std::to_string(cases[i].e) + ": " + errors[i] + ") ";
    }
  if (v.pass) v.detail = std::to_string(cases.size()) + " systems, K = A n + 10";
  return v;
}

Verdict integrality() {
  auto cases = random_integrality_cases(1, 50);
  std::vector<std::string> errors(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    try {
      auto rep = integrality_audit(build_pade(c.n, c.A, c.q), c.a, c.b, c.p, c.e);
      if (!rep.passed) errors[i] = "statement " + std::to_string(rep.failures.front().statement);
      for (long k = 0; k <= c.n; ++k) {
        if (c.a + k * c.b == 0) continue;
        auto ar = aritmu_check(c.a, c.b, c.n, k);
        if (!ar.is_int1 || !ar.is_int2) errors[i] = "arithmetic lemma at k=" + std::to_string(k);
      }
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  });
  Verdict v;
  long failures = 0;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!errors[i].empty()) {
      ++failures;
      v.detail += errors[i] + "; ";
    }
  v.pass = failures == 0;
  v.detail = std::to_string(cases.size()) + " cases, " + std::to_string(failures) + " failures " + v.detail;
  return v;
}

// Root of unity congruent to u modulo p (modulo 4 for p = 2), by Newton on X^{p-1} - 1.
Integer root_of_unity_mod(const Integer& u, long p, long digits) {
  Integer mod = prime_power(p, digits);
  if (p == 2) {
    Integer r = u % 4;
    if (r < 0) r += 4;
    return r == 1 ? Integer(1) : Integer(mod - 1);
  }
  Integer x = u % p;
  if (x < 0) x += p;
  for (long known = 1; known < digits; known *= 2) {
    Integer xp, fx, dfx, inv;
    mpz_powm_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p - 2), mod.get_mpz_t());
    fx = (xp * x - 1) % mod;
    dfx = (Integer(p - 1) * xp) % mod;
    mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), mod.get_mpz_t());
    x = (x - fx * inv) % mod;
    if (x < 0) x += mod;
  }
  return x;
}

Verdict zeta_special_values() {
  const long digits = 30;
  Verdict v;
  long checked = 0;
  for (long p : {3L, 5L, 7L})
    for (long c : {1L, 2L, 7L}) {
      const Rational x{Integer(c), Integer(p)};
      const long vx = padelin::valuation(x, p);
      const Rational unit = x / pow(Rational(p), vx);
      const Integer mod = prime_power(p, digits + 20);
      Integer inv;
      Integer den = unit.den();
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
      Rational omega = Rational(root_of_unity_mod(Integer(unit.num() * inv % mod), p, digits + 20)) * pow(Rational(p), vx);
      for (long m = 1; m <= 6; ++m) {
        PAdic got = zeta_p_negative(m, PAdic::exact(x, p, digits + 20));
        Rational expected = -bernoulli_polynomial(m)(x) / (pow(omega, m) * Rational(m));
        PAdic want = PAdic::from_rational(expected, p, digits + 10);
        ++checked;
        if (got.precision() < digits || !got.agrees_with(want, digits)) {
          v.pass = false;
          v.detail += "(p=" + std::to_string(p) + ",x=" + x.str() + ",m=" + std::to_string(m) + ") ";
        }
      }
    }
  if (v.pass) v.detail = std::to_string(checked) + " values agree mod p^30";
  return v;
}

Verdict two_path_tp() {
  struct Case {
    long p, e, s;
    Rational x;
  };
  std::mt19937_64 rng(1);
  auto pick = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<Case> cases;
  cases.push_back({2, 3, 2, Rational(Integer(3), Integer(2))});
  while (cases.size() < 20) {
    static constexpr long primes[] = {2, 3, 5, 7, 11};
    long p = primes[pick(0, 4)];
    long e = pick(2, 6);
    if (std::gcd(e, p) != 1) continue;
    long k = pick(1, 2);
    long a = pick(-40, 40);
    if (a == 0 || a % p == 0) continue;
    if (p == 2 && k == 1 && cases.size() % 2 == 0) k = 2;
    cases.push_back({p, e, pick(1, 4), Rational(Integer(a), prime_power(p, k))});
  }
  const long N = 20, guard = 4;
  std::vector<std::string> errors(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    try {
      PrecisionContext ctx(c.p, N, guard);
      auto field = UnramifiedExtension::make(c.e, c.p, 2 * N + 64);
      PAdic x = PAdic::exact(c.x, c.p, N + guard + 16);
      auto direct = t_p(c.s, x, field, ctx);
      auto series = t_p_series(c.s, x, field, ctx);
      auto tilde = ttilde_p(c.s, x, field, ctx);
      PAdic x_over_e = PAdic::exact(c.x / Rational(c.e), c.p, N + guard + 16);
      PAdic scale = PAdic::exact(Rational(Integer(1), Integer(ipow(c.e, c.s))), c.p, N + guard + 16) *
                    pow(teichmuller(x_over_e, ctx), 1 - c.s);
      auto related = tilde * scale;
      const long cap = N - guard;
      if (direct.precision() < cap || !direct.agrees_with(series, cap)) errors[i] = "series path";
      if (!direct.agrees_with(related, cap)) errors[i] += " relation";
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  });
  Verdict v;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!errors[i].empty()) {
      v.pass = false;
      v.detail += "(p=" + std::to_string(cases[i].p) + ",e=" + std::to_string(cases[i].e) + ",s=" +
                  std::to_string(cases[i].s) + ",x=" + cases[i].x.str() + ": " + errors[i] + ") ";
    }
  if (v.pass) v.detail = std::to_string(cases.size()) + " inputs agree to N - guard = " + std::to_string(N - guard);
  return v;
}

Verdict padic_decay() {
  struct Case {
    long q, n;
  };
  std::vector<Case> cases;
  for (long q = 0; q <= 2; ++q)
    for (long n = 8; n <= 24; ++n) cases.push_back({q, n});
  std::vector<std::string> errors(cases.size());
  std::vector<long> vals(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    try {
      auto sys = build_pade(c.n, 2, c.q);
      auto direct = linear_form(sys, 2, 5, 5, 2, 64);
      auto series = linear_form_from_series(sys, 2, 5, 5, 2, direct.value.precision());
      vals[i] = direct.valuation;
      if (direct.valuation < 2 * c.n - 8) errors[i] = "v=" + std::to_string(direct.valuation);
      if (!direct.value.agrees_with(series.value)) errors[i] += " paths disagree";
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  });
  Verdict v;
  std::ostringstream os;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!errors[i].empty()) {
      v.pass = false;
      os << "(q=" << cases[i].q << ",n=" << cases[i].n << ": " << errors[i] << ") ";
    }
  if (v.pass) {
    os << "v_5(U_n) for q=0:";
    for (std::size_t i = 0; i < 17; ++i) os << " " << vals[i];
  }
  v.detail = os.str();
  return v;
}

Verdict archimedean() {
  Verdict v;
  std::ostringstream os;
  const double cap = std::log(2.0) + 0.3;
  for (long q = 0; q <= 2; ++q) {
    auto rep = archimedean_slope(2, q, Rational(Integer(2), Integer(5)), 2, {40});
    double slope = rep.points.front().slope;
    v.pass = v.pass && slope <= cap;
    os << "q=" << q << ": " << std::setprecision(4) << slope << " ";
  }
  os << "(cap " << std::setprecision(4) << cap << ")";
  v.detail = os.str();
  return v;
}

Verdict scan() {
  Verdict v;
  auto rep = theorem2_scan(2, 100);
  auto bracket = theorem2_bracket(2);
  auto at = [](long p) { return bound_formula(2, p, p, 2, 2, BoundVariant::proposition).tau_lower_bound; };
  const double b19 = at(19), b17 = at(17), big = at(1000003);
  bool scan_ok = rep.threshold && *rep.threshold == 19 && bracket.threshold == 19;
  bool ok19 = std::abs(b19 - 1.015) <= 5e-4 && b19 > 1;
  bool ok17 = std::abs(b17 - 0.994) <= 5e-4 && b17 <= 1;
  bool ok_big = std::abs(big - 2.0) <= 0.1;
  v.pass = scan_ok && ok19 && ok17 && ok_big;
  std::ostringstream os;
  os << std::setprecision(6) << "M_2 scan=" << (rep.threshold ? *rep.threshold : -1) << " bracket=" << bracket.threshold
     << "; bound(19)=" << b19 << " bound(17)=" << b17 << " bound(1000003)=" << big
     << (ok_big ? "" : " (not within 0.1 of 2)");
  v.detail = os.str();
  return v;
}

Verdict float_identity() {
  Verdict v;
  std::ostringstream os;
  os << std::setprecision(3);
  for (long q = 0; q <= 2; ++q) {
    double r = static_cast<double>(numeric_identity_check(build_pade(3, 2, q), 2, Rational(Integer(3), Integer(2)), 100000));
    v.pass = v.pass && r <= 1e-8;
    os << "(n=3,A=2,q=" << q << ") " << r << "; ";
  }
  double r = static_cast<double>(numeric_identity_check(build_pade(2, 3, 0), 3, Rational(2), 100000));
  v.pass = v.pass && r <= 1e-8;
  os << "(n=2,A=3,q=0,e=3) " << r << "; ";
  auto sys = build_pade(3, 2, 0);
  std::vector<double> logs;
  for (long x0 : {10L, 20L, 40L}) {
    double res = static_cast<double>(numeric_identity_check(sys, 2, Rational(x0), 100000));
    v.pass = v.pass && res <= 1e-8;
    logs.push_back(std::log(static_cast<double>(remainder_magnitude(sys, 2, x0, 100000))));
  }
  const double exponent = -2.0 * 3 + 3 + 3 - 0;
  double slope1 = (logs[1] - logs[0]) / std::log(2.0), slope2 = (logs[2] - logs[1]) / std::log(2.0);
  v.pass = v.pass && slope1 < exponent && slope2 < exponent;
  os << "|S| slopes over x0 in {10,20,40}: " << slope1 << ", " << slope2 << " (< " << exponent << ")";
  v.detail = os.str();
  return v;
}

Verdict determinism() {
  SuiteConfig config = SuiteConfig::defaults();
  config.seed = 7;
  config.threads = 0;
  auto first = run_certify_suite(config);
  config.threads = 1;
  auto second = run_certify_suite(config);
  Verdict v;
  const std::string a = first.bundle.dump(), b = second.bundle.dump();
  v.pass = a == b && first.manifest.dump() == second.manifest.dump() && decay_csv(first) == decay_csv(second);
  v.detail = std::to_string(a.size()) + " byte bundle" + (v.pass ? ", identical across runs" : ", runs differ");
  if (!first.ok) v.detail += "; suite reported: " + first.first_failure;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"determinant factorization", determinant_factorization},
      {"remainder vanishing", remainder_vanishing},
      {"integrality", integrality},
      {"zeta special values", zeta_special_values},
      {"two-path T_p", two_path_tp},
      {"p-adic decay", padic_decay},
      {"archimedean slope", archimedean},
      {"threshold scan", scan},
      {"float identity", float_identity},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!v.pass) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << std::fixed << std::setprecision(1) << secs << "s] " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
