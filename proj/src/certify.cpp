#include "padelin/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "padelin/combinatorics.hpp"
#include "padelin/zeta.hpp"

namespace padelin {

long max_precision_from_env() {
  if (const char* v = std::getenv("PADELIN_MAX_PRECISION")) {
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0) return parsed;
  }
  return 4096;
}

BiPolyQ bareiss_determinant(PolyMatrix m) {
  const std::size_t k = m.size();
  if (k == 0) return BiPolyQ::constant(Rational(1));
  bool negate = false;
  BiPolyQ prev = BiPolyQ::constant(Rational(1));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (m[i][i].is_zero()) {
      std::size_t r = i + 1;
      while (r < k && m[r][i].is_zero()) ++r;
      if (r == k) return BiPolyQ();
      std::swap(m[i], m[r]);
      negate = !negate;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        BiPolyQ num = m[r][c] * m[i][i] - m[r][i] * m[i][c];
        auto quo = num.exact_divide(prev);
        if (!quo) throw std::logic_error("fraction-free elimination step is not exact");
        m[r][c] = std::move(*quo);
      }
      m[r][i] = BiPolyQ();
    }
    prev = m[i][i];
  }
  return negate ? -m[k - 1][k - 1] : m[k - 1][k - 1];
}

BiPolyQ cofactor_determinant(const PolyMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return BiPolyQ::constant(Rational(1));
  if (k == 1) return m[0][0];
  BiPolyQ out;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<BiPolyQ> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    BiPolyQ term = m[0][c] * cofactor_determinant(minor);
    if (c % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

DeterminantCertificate determinant_certificate(long n, long A, bool inject_fault) {
  auto start = std::chrono::steady_clock::now();
  DeterminantCertificate cert;
  cert.n = n;
  cert.A = A;
  PolyMatrix m;
  for (long q = 0; q <= A; ++q) m.push_back(build_pade(n, A, q).P);
  if (inject_fault) m[0][1].add_term(Rational(1), 0, 0);

  BiPolyQ det = bareiss_determinant(m);
  BiPolyQ check = cofactor_determinant(m);
  cert.methods_agree = det == check;
  cert.deg_x = det.deg_x();
  cert.deg_z = det.deg_z();
  auto finish = [&](std::string failure) {
    cert.failure = std::move(failure);
    cert.verified = cert.failure.empty();
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
  };
  if (!cert.methods_agree) return finish("factorization mismatch: elimination and cofactor expansion differ");
  if (det.is_zero()) return finish("factorization mismatch: determinant vanishes");
  auto reduced = det.divide_monomial(A, n + 1);
  if (!reduced) return finish("factorization mismatch: not divisible by x^A z^(n+1)");
  const BiPolyQ z_minus_one = BiPolyQ::term(Rational(1), 0, 1) - BiPolyQ::constant(Rational(1));
  BiPolyQ divisor = BiPolyQ::constant(Rational(1));
  for (long i = 0; i < (A - 1) * n - 2; ++i) divisor *= z_minus_one;
  auto quotient = reduced->exact_divide(divisor);
  if (!quotient) return finish("factorization mismatch: not divisible by (z-1)^((A-1)n-2)");
  if (quotient->size() != 1 || quotient->coefficient(0, 0).is_zero())
    return finish("factorization mismatch: quotient is not a nonzero constant");
  cert.gamma = quotient->coefficient(0, 0);
  return finish("");
}

namespace {

long min_coordinate_valuation(const CycloElement& v, long p) {
  long out = kInfiniteValuation;
  for (const auto& c : v.coeffs()) out = std::min(out, valuation(c, p));
  return out;
}

bool in_integer_ring(const CycloElement& v) {
  return std::all_of(v.coeffs().begin(), v.coeffs().end(), [](const Rational& c) { return c.is_integer(); });
}

}  // namespace

IntegralityReport integrality_audit(const PadeSystem& sys, long a, long b, long p, long e) {
  if (b < 1 || std::gcd(a, b) != 1) throw std::invalid_argument("need b >= 1 and gcd(a, b) = 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  IntegralityReport rep;
  rep.n = sys.n;
  rep.A = sys.A;
  rep.q = sys.q;
  rep.a = a;
  rep.b = b;
  rep.p = p;
  rep.e = e;
  const long n = sys.n, A = sys.A;
  const Rational pk(ipow(p, static_cast<unsigned long>(n / (p - 1))));
  const Rational dn(lcm_upto(n));
  const Rational mu_b(mu(b, n));
  const Rational x{Integer(a), Integer(b)};
  const CycloElement xi = cyclo_root(e);
  for (long s = 0; s <= A; ++s) {
    const Rational dpow = pow(dn, s == 0 ? A - 1 : A - s);
    const auto poly = at_root(sys.P[s], e);
    const int stmt = s == 0 ? 2 : 1;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
      CycloElement c = poly.coeffs()[i] * CycloElement(pk * dpow);
      if (min_coordinate_valuation(c, p) < 0)
        rep.failures.push_back({stmt, s, "coefficient of x^" + std::to_string(i) + " = " + c.str()});
    }
    CycloElement value = evaluate(sys.P[s], x, xi);
    if (s == 0)
      value *= CycloElement(pow(dn, A) * mu_b);
    else
      value *= CycloElement(Rational(b) * dpow * mu_b);
    if (!in_integer_ring(value))
      rep.failures.push_back({s == 0 ? 4 : 3, s, "value at x = " + x.str() + " is " + value.str()});
  }
  rep.passed = rep.failures.empty();
  return rep;
}

double c_bound(long b, long A) {
  double c = std::log(static_cast<double>(b)) + static_cast<double>(A) + static_cast<double>(A - 1) * std::log(2.0);
  for (long q : prime_factors(b)) c += std::log(static_cast<double>(q)) / static_cast<double>(q - 1);
  return c;
}

SlopeReport archimedean_slope(long A, long q, const Rational& x0, long e, const std::vector<long>& ns) {
  SlopeReport rep;
  rep.A = A;
  rep.q = q;
  rep.e = e;
  rep.x0 = x0;
  rep.cap = static_cast<double>(A - 1) * std::log(2.0);
  rep.c = c_bound(x0.den().get_si(), A);
  const CycloElement xi = cyclo_root(e);
  for (long n : ns) {
    auto sys = build_pade(n, A, q);
    long double best = -std::numeric_limits<long double>::infinity();
    for (const auto& P : sys.P) best = std::max(best, log_abs_embedded(evaluate(P, x0, xi)));
    rep.points.push_back({n, static_cast<double>(best / static_cast<long double>(n))});
  }
  return rep;
}

namespace {

void check_linear_form_input(long a, long b, long p, long e) {
  if (b < 1 || std::gcd(a, b) != 1) throw std::invalid_argument("need b >= 1 and gcd(a, b) = 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 2 || e % p == 0) throw std::invalid_argument("need e >= 2 coprime to p");
  if (a == 0 || valuation(Rational(Integer(a), Integer(b)), p) > -1)
    throw std::invalid_argument("need |a/b|_p >= p");
}

}  // namespace

LinearFormValue linear_form(const PadeSystem& sys, long a, long b, long p, long e, long start_precision, long guard,
                            long max_precision) {
  check_linear_form_input(a, b, p, e);
  const Rational x{Integer(a), Integer(b)};
  const CycloElement xi = cyclo_root(e);
  const Integer b_factor = b;
  const Integer mu_factor = mu(b, sys.n);
  Integer dn_power;
  mpz_pow_ui(dn_power.get_mpz_t(), lcm_upto(sys.n).get_mpz_t(), static_cast<unsigned long>(sys.A));
  const Rational scale(Integer(b_factor * mu_factor * dn_power));
  std::vector<CycloElement> p_values;
  for (const auto& P : sys.P) p_values.push_back(evaluate(P, x, xi));

  for (long N = std::max(start_precision, 8L);; N *= 2) {
    if (N > max_precision) throw PrecisionExhausted("precision exhausted: valuation not certified below p^" + std::to_string(max_precision));
    auto field = UnramifiedExtension::make(e, p, 2 * N + 64);
    PrecisionContext ctx(p, N, guard);
    PAdic xp = PAdic::exact(x, p, N + 64);
    PAdicExt sum = PAdicExt::from_cyclo(field, p_values[0], N + 64);
    for (long s = 1; s <= sys.A; ++s)
      sum += PAdicExt::from_cyclo(field, p_values[s], N + 64) * t_p(s, xp, field, ctx);
    PAdicExt u = sum * PAdic::exact(scale, p, N + 64);
    if (!u.is_zero() && u.valuation() + guard <= u.precision()) {
      LinearFormValue out;
      out.n = sys.n;
      out.A = sys.A;
      out.q = sys.q;
      out.a = a;
      out.b = b;
      out.p = p;
      out.e = e;
      out.value = u;
      out.valuation = u.valuation();
      out.working_precision = N;
      out.b_factor = b_factor;
      out.mu_factor = mu_factor;
      out.dn_power = dn_power;
      return out;
    }
  }
}

SeriesLinearForm linear_form_from_series(const PadeSystem& sys, long a, long b, long p, long e, long target) {
  check_linear_form_input(a, b, p, e);
  const long n = sys.n;
  const Rational x{Integer(a), Integer(b)};
  const long w = -valuation(x, p);
  const long kfac = n / (p - 1);
  auto tail_valuation = [&](long k) { return (k + n + 1) * w - 1 - floor_log(p, Integer(k + n + 1)); };
  long last = -n;
  while (tail_valuation(last + 1) < target) ++last;
  last = std::max(last, sys.A * (n - 1) - 3);
  RemainderSeries rs = remainder_series(sys, e, last);

  SeriesLinearForm out;
  out.terms = last;
  out.coefficient_bound_holds = true;
  CycloElement acc = CycloElement::rational(e, Rational());
  const Rational inv = Rational(1) / x;
  for (long k = -n; k <= last; ++k) {
    const CycloElement& u = rs.at(k);
    long v = u.is_zero() ? kInfiniteValuation : min_coordinate_valuation(u, p);
    out.coefficient_valuations.push_back(v);
    if (!u.is_zero()) {
      if (-v > floor_log(p, Integer(k + n + 1)) + kfac + 1) out.coefficient_bound_holds = false;
      acc += u * CycloElement(pow(inv, k));
    }
  }
  acc *= CycloElement(Rational(Integer(Integer(b) * mu(b, n))));
  auto field = UnramifiedExtension::make(e, p, 2 * target + 64);
  out.value = PAdicExt::from_cyclo(field, acc, target);
  return out;
}

BoundReport bound_formula(long a, long b, long p, long e, long A, BoundVariant variant) {
  if (b < 1 || std::gcd(a, b) != 1) throw std::invalid_argument("need b >= 1 and gcd(a, b) = 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (A < 2) throw std::invalid_argument("A must be >= 2");
  if (e < 2 || e % p == 0) throw std::invalid_argument("need e >= 2 coprime to p");
  if (a == 0) throw std::invalid_argument("need |a/b|_p >= p");
  const long w = -valuation(Rational(Integer(a), Integer(b)), p);
  if (w < 1) throw std::invalid_argument("need |a/b|_p >= p");
  BoundReport rep;
  rep.a = a;
  rep.b = b;
  rep.p = p;
  rep.e = e;
  rep.A = A;
  rep.variant = variant;
  rep.ext_degree = multiplicative_order(p, e);
  rep.field_degree = variant == BoundVariant::proposition ? euler_phi(e) : euler_phi(std::lcm(e, p - 1));
  rep.c = c_bound(b, A);
  rep.rho = static_cast<double>(A * w) * std::log(static_cast<double>(p));
  rep.tau_lower_bound = static_cast<double>(rep.ext_degree) / static_cast<double>(rep.field_degree) * rep.rho / rep.c;
  rep.dimension_at_least = static_cast<long>(std::ceil(rep.tau_lower_bound));
  return rep;
}

BoundReport dimension_bound(long a, long b, long p, long e, long A, BoundVariant variant,
                            const std::vector<DeterminantCertificate>& certificates, bool trust) {
  bool certified = std::any_of(certificates.begin(), certificates.end(),
                               [A](const DeterminantCertificate& c) { return c.A == A && c.verified; });
  if (!certified && !trust)
    throw UncertifiedBound("no verified determinant certificate for A = " + std::to_string(A));
  BoundReport rep = bound_formula(a, b, p, e, A, variant);
  rep.trusted = !certified;
  return rep;
}

double theorem2_bound_at_log(long A, double log_p) {
  const double Ad = static_cast<double>(A);
  const double c = log_p + log_p / std::expm1(log_p) + Ad + (Ad - 1) * std::log(2.0);
  return Ad * log_p / c;
}

ScanReport theorem2_scan(long A, long p_max, bool keep_rows) {
  if (A < 2) throw std::invalid_argument("A must be >= 2");
  ScanReport rep;
  rep.A = A;
  rep.p_max = p_max;
  if (p_max < 3) return rep;
  std::vector<bool> composite(static_cast<std::size_t>(p_max) + 1, false);
  for (long i = 2; i * i <= p_max; ++i)
    if (!composite[i])
      for (long j = i * i; j <= p_max; j += i) composite[j] = true;
  for (long p = 3; p <= p_max; p += 2) {
    if (composite[p]) continue;
    const double lp = std::log(static_cast<double>(p));
    const double c = lp + lp / static_cast<double>(p - 1) + static_cast<double>(A) + static_cast<double>(A - 1) * std::log(2.0);
    const double bound = static_cast<double>(A) * lp / c;
    if (keep_rows) rep.rows.push_back({p, bound});
    if (!rep.threshold && bound > static_cast<double>(A - 1)) rep.threshold = p;
  }
  return rep;
}

BracketResult theorem2_bracket(long A) {
  if (A < 2) throw std::invalid_argument("A must be >= 2");
  const double target = static_cast<double>(A - 1);
  double lo = std::log(3.0);
  double hi = lo;
  while (theorem2_bound_at_log(A, hi) <= target) hi *= 2;
  if (theorem2_bound_at_log(A, lo) > target) return {lo, 3};
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (theorem2_bound_at_log(A, mid) > target ? hi : lo) = mid;
  }
  long p = static_cast<long>(std::floor(std::exp(lo)));
  p = std::max(p, 3L);
  while (!(is_prime(p) && p % 2 == 1 && std::log(static_cast<double>(p)) > hi)) ++p;
  return {hi, p};
}

}  // namespace padelin
