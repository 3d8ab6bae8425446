#include "padelin/pade.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "padelin/combinatorics.hpp"
#include "padelin/zeta.hpp"

namespace padelin {

void check_pade_parameters(long n, long A, long q) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (A < 2) throw std::invalid_argument("A must be >= 2");
  if (q < 0 || q > A) throw std::invalid_argument("q must lie in [0, A]");
  if (A * n < n + 3) throw std::invalid_argument("need A n >= n + 3");
}

namespace {

// Coefficients of (c - t)^{-power} up to t^{len-1}.
std::vector<Rational> inverse_power_series(long c, long power, long len) {
  std::vector<Rational> out(len);
  for (long m = 0; m < len; ++m)
    out[m] = Rational(binomial(power + m - 1, m)) / pow(Rational(c), power + m);
  return out;
}

std::vector<Rational> mul_series(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Taylor coefficients in t (l = j + t) of R(-l - x) (j - l)^{order}, up to t^{len-1}.
std::vector<PolyQ> local_expansion(long n, long A, long q, long j, long len) {
  const PolyQ minus_one = PolyQ::constant(Rational(-1));
  std::vector<PolyQ> num(len);
  num[0] = PolyQ::constant(Rational(factorial(static_cast<unsigned long>(n))));
  num[0] = pow(num[0], static_cast<unsigned long>(A - 1));
  for (long i = 0; i <= n; ++i) {
    // factor (i - j - x) - t
    PolyQ c0({Rational(i - j), Rational(-1)});
    for (long m = len - 1; m >= 0; --m) {
      PolyQ next = num[m] * c0;
      if (m > 0) next += num[m - 1] * minus_one;
      num[m] = next;
    }
  }
  std::vector<Rational> den(len);
  den[0] = Rational(1);
  for (long i = 0; i < n; ++i)
    if (i != j) den = mul_series(den, inverse_power_series(i - j, A, len));
  if (j < n && q > 0) den = mul_series(den, inverse_power_series(n - j, q, len));
  std::vector<PolyQ> out(len);
  for (long i = 0; i < len; ++i)
    for (long k = 0; i + k < len; ++k) out[i + k] += num[i] * den[k];
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("approximation system invariant violated: " + what);
}

}  // namespace

ResidueTable residue_coeffs(long n, long A, long q) {
  check_pade_parameters(n, A, q);
  ResidueTable r(n + 1, std::vector<PolyQ>(A + 1));
  for (long j = 0; j <= n; ++j) {
    long order = j < n ? A : q;
    if (order == 0) continue;
    auto g = local_expansion(n, A, q, j, order);
    for (long s = 1; s <= order; ++s) {
      PolyQ c = g[order - s];
      r[j][s] = (order - s) % 2 == 0 ? c : -c;
    }
  }
  return r;
}

Rational rational_function_value(long n, long A, long q, const Rational& x, const Rational& k) {
  Rational num = pow(Rational(factorial(static_cast<unsigned long>(n))), A - 1) * pochhammer(k, n + 1);
  Rational den = pow(pochhammer(k + x, n), A) * pow(x + k + Rational(n), q);
  return num / den;
}

void check_pade_degrees(const PadeSystem& sys) {
  const long n = sys.n, A = sys.A, q = sys.q;
  require(static_cast<long>(sys.P.size()) == A + 1, "one polynomial per s in [0, A]");
  for (long s = 1; s <= A; ++s) {
    require(sys.P[s].deg_x() <= n + 1, "deg_x P_" + std::to_string(s) + " <= n + 1");
    require(sys.P[s].deg_z() <= n, "deg_z P_" + std::to_string(s) + " <= n");
    if (s > q) {
      require(sys.P[s].deg_z() <= n - 1, "deg_z P_" + std::to_string(s) + " <= n - 1 for s > q");
      require(sys.r[n][s].is_zero(), "r_{n," + std::to_string(s) + "} = 0 for s > q");
    }
  }
  require(sys.P[0].deg_x() <= n, "deg_x P_0 <= n");
  require(sys.P[0].deg_z() <= n, "deg_z P_0 <= n");
  if (q >= 1) {
    require(sys.P[q].deg_z() == n, "deg_z P_q = n");
    PolyQ expected = pow(PolyQ::constant(Rational(factorial(static_cast<unsigned long>(n)))),
                         static_cast<unsigned long>(A - 1)) *
                     pochhammer(PolyQ({Rational(-n), Rational(-1)}), n + 1);
    Rational scale = pow(pochhammer(Rational(-n), n), A);
    require(sys.P[q].z_coefficient(n) == expected * (Rational(1) / scale), "leading coefficient r_{n,q}");
  }
}

PadeSystem build_pade(long n, long A, long q) {
  PadeSystem sys;
  sys.n = n;
  sys.A = A;
  sys.q = q;
  sys.r = residue_coeffs(n, A, q);
  sys.P.assign(A + 1, BiPolyQ());
  for (long s = 1; s <= A; ++s)
    for (long j = 0; j <= n; ++j) sys.P[s] += BiPolyQ::from_x_poly(sys.r[j][s], j);
  // Coefficient of z^m in P_0 is -sum_{j >= m} sum_s r[j][s] / (x + j - m)^s.
  for (long m = 1; m <= n; ++m) {
    PolyQ coeff;
    for (long j = m; j <= n; ++j) {
      const long c = j - m;
      const PolyQ shift = PolyQ::x_plus(Rational(c));
      PolyQ num;
      for (long s = 1; s <= A; ++s) num += sys.r[j][s] * pow(shift, static_cast<unsigned long>(A - s));
      auto [quo, rem] = num.divmod(pow(shift, static_cast<unsigned long>(A)));
      require(rem.is_zero(), "pole of P_0 at x = " + std::to_string(-c) + " cancels");
      coeff -= quo;
    }
    sys.P[0] += BiPolyQ::from_x_poly(coeff, m);
  }
  check_pade_degrees(sys);
  return sys;
}

CycloElement evaluate(const BiPolyQ& P, const Rational& x0, const CycloElement& z0) {
  return P.substitute_x(CycloElement(x0))(z0);
}

Poly<CycloElement> at_root(const BiPolyQ& P, long e) {
  return P.substitute_z(e == 1 ? CycloElement(1L) : cyclo_root(e));
}

long RemainderSeries::first_nonzero() const {
  for (long k = -n; k <= truncation; ++k)
    if (!at(k).is_zero()) return k;
  return truncation + 1;
}

RemainderSeries remainder_series(const PadeSystem& sys, long e, long truncation) {
  const long n = sys.n, A = sys.A;
  const long bound = A * (n - 1) - 3;
  if (truncation < bound) throw std::invalid_argument("truncation order too small to certify the vanishing range");
  const long theta_last = truncation + n + 1;
  using Series = LaurentTail<CycloElement>;
  Series v = Series::from_poly(at_root(sys.P[0], e));
  for (long s = 1; s <= A; ++s) {
    Series theta(0, theta_coefficients(s, e, theta_last), theta_last);
    v = v + Series::from_poly(at_root(sys.P[s], e)) * theta;
  }
  const Rational scale(pow(Rational(lcm_upto(n)), A));
  v = v * CycloElement(scale);
  if (v.truncation() && *v.truncation() < truncation) throw std::logic_error("remainder truncation bookkeeping");

  RemainderSeries out;
  out.n = n;
  out.A = A;
  out.q = sys.q;
  out.e = e;
  out.truncation = truncation;
  for (long k = -n; k <= truncation; ++k) out.u.push_back(v[k]);
  for (long k = -n - 1; k > -n - 3; --k)
    if (!v[k].is_zero()) throw std::logic_error("remainder has a polynomial part beyond x^n");
  for (long k = -n; k < bound && k <= truncation; ++k)
    if (!out.at(k).is_zero())
      throw std::logic_error("remainder coefficient u_" + std::to_string(k) + " does not vanish");
  return out;
}

namespace {

using Complex = std::complex<long double>;

// Partial sums averaged over a period, twice; exact on periodic oscillation
// and suppresses the oscillating tail of a twisted series by two orders.
template <class Term>
Complex averaged_sum(Term term, long terms, long period) {
  std::vector<Complex> partial;
  partial.reserve(terms);
  Complex acc{0, 0};
  for (long k = 0; k < terms; ++k) {
    acc += term(k);
    partial.push_back(acc);
  }
  if (terms < 2 * period) return acc;
  auto mean = [&](long end) {
    Complex m{0, 0};
    for (long i = end - period + 1; i <= end; ++i) m += partial[i];
    return m / static_cast<long double>(period);
  };
  Complex outer{0, 0};
  for (long i = terms - period; i < terms; ++i) outer += mean(i);
  return outer / static_cast<long double>(period);
}

long double rational_function_float(long n, long A, long q, long double x, long double k) {
  long double nf = 1;
  for (long i = 2; i <= n; ++i) nf *= static_cast<long double>(i);
  long double value = std::pow(nf, static_cast<long double>(A - 1));
  for (long i = 0; i <= n; ++i) value *= k + i;
  for (long i = 0; i < n; ++i) value /= std::pow(k + x + i, static_cast<long double>(A));
  value /= std::pow(x + k + n, static_cast<long double>(q));
  return value;
}

Complex root_power(long e, long k) {
  const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k % e) / e;
  return {std::cos(t), std::sin(t)};
}

}  // namespace

long double numeric_identity_check(const PadeSystem& sys, long e, const Rational& x0, long terms,
                                   int /*float_precision_bits*/) {
  const long double x = static_cast<long double>(x0.to_double());
  const CycloElement xi = e == 1 ? CycloElement(1L) : cyclo_root(e);
  Complex s_value = averaged_sum(
      [&](long k) { return rational_function_float(sys.n, sys.A, sys.q, x, k) * root_power(e, -k); }, terms, e);
  Complex rhs = embed_complex(evaluate(sys.P[0], x0, xi));
  for (long s = 1; s <= sys.A; ++s) {
    Complex phi = averaged_sum(
        [&](long k) { return root_power(e, -k) / std::pow(k + x, static_cast<long double>(s)); }, terms, e);
    rhs += embed_complex(evaluate(sys.P[s], x0, xi)) * phi;
  }
  return std::abs(s_value - rhs);
}

long double remainder_magnitude(const PadeSystem& sys, long e, long double x0, long terms) {
  Complex s_value = averaged_sum(
      [&](long k) { return rational_function_float(sys.n, sys.A, sys.q, x0, k) * root_power(e, -k); }, terms, e);
  return std::abs(s_value);
}

}  // namespace padelin
