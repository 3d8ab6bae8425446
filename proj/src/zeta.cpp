#include "padelin/zeta.hpp"

#include <stdexcept>

#include "padelin/combinatorics.hpp"

namespace padelin {

namespace {

// Root of unity congruent to the unit u, modulo p^digits.
Integer unit_root_of_unity(const Integer& u, long p, long digits) {
  Integer mod = prime_power(p, digits);
  if (p == 2) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 4);
    return r == 1 ? Integer(1) : Integer(mod - 1);
  }
  // u^{p^{k}} agrees with omega(u) modulo p^{k+1}.
  Integer exponent = prime_power(p, digits - 1);
  Integer out;
  mpz_powm(out.get_mpz_t(), u.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
  return out;
}

void require_nonzero(const PAdic& x) {
  if (x.is_zero()) throw std::domain_error("indeterminate Teichmuller character of zero");
}

void require_large(const PAdic& x) {
  if (x.is_zero() || x.valuation() > -1) throw std::domain_error("series needs |x|_p > 1");
}

// Significant digits used for exact rational coefficients.
long coefficient_digits(long p, long target, long terms) {
  return target + 8 + floor_log(p, Integer(std::max(terms, 1L) + 1)) * 2;
}

PAdicExt xi_power(const PAdicExt::Field& field, long k, long precision) {
  return PAdicExt::from_cyclo(field, cyclo_power(field->order(), k), precision);
}

PAdic shifted_over_e(const PAdic& x, long j, long e, long digits) {
  long p = x.prime();
  return (x + PAdic::exact(Rational(j), p, digits)) * PAdic::exact(Rational(Integer(1), Integer(e)), p, digits);
}

void check_field(const PAdic& x, const PAdicExt::Field& field) {
  if (!field) throw std::invalid_argument("missing extension field");
  if (field->prime() != x.prime()) throw std::invalid_argument("extension built for a different prime");
  if (field->order() < 2) throw std::invalid_argument("e must be at least 2");
  if (x.is_zero() || x.valuation() > -1) throw std::domain_error("twisted sums need |x|_p >= p");
}

}  // namespace

PAdic teichmuller(const PAdic& x, const PrecisionContext& ctx) {
  require_nonzero(x);
  long digits = std::max(ctx.N, 1L) + ctx.guard;
  Integer w = unit_root_of_unity(x.unit(), x.prime(), digits);
  return PAdic::from_integer(w, x.prime(), digits) *
         PAdic::exact(x.valuation() >= 0 ? Rational(prime_power(x.prime(), x.valuation()))
                                         : Rational(Integer(1), prime_power(x.prime(), -x.valuation())),
                      x.prime(), digits);
}

PAdic angle(const PAdic& x) {
  require_nonzero(x);
  long digits = x.relative_precision();
  Integer w = unit_root_of_unity(x.unit(), x.prime(), digits);
  PAdic u = PAdic::from_integer(x.unit(), x.prime(), digits);
  return u * PAdic::from_integer(w, x.prime(), digits).inverse();
}

PAdic angle_power(const PAdic& x, long t) { return pow(angle(x), t); }

long bernoulli_series_terms(long p, long w, long target) {
  if (w < 1) throw std::invalid_argument("series needs a positive valuation step");
  long j = 1;
  while (j * w - 1 - floor_log(p, Integer(j)) < target) ++j;
  return j - 1;
}

PAdic log_p(const PAdic& u, const PrecisionContext& ctx) {
  const long p = u.prime();
  PAdic y = u - PAdic::exact(Rational(1), p, u.precision() + 1);
  long target = std::min(u.precision(), ctx.N);
  if (y.is_zero()) {
    if (y.precision() < 1) throw std::domain_error("log_p needs |u - 1|_p < 1");
    return PAdic::zero(p, target);
  }
  long w = y.valuation();
  if (w < 1) throw std::domain_error("log_p needs |u - 1|_p < 1");
  long k = 1;
  while (k * w - floor_log(p, Integer(k)) < target) ++k;
  long terms = k - 1;
  long digits = coefficient_digits(p, target, terms);
  PAdic sum = PAdic::zero(p, target);
  PAdic power = y;
  for (long i = 1; i <= terms; ++i) {
    Rational c(Integer(i % 2 == 1 ? 1 : -1), Integer(i));
    sum += power * PAdic::exact(c, p, digits);
    power *= y;
  }
  return sum.with_precision(target);
}

PAdic zeta_p(long s, const PAdic& x, const PrecisionContext& ctx) {
  if (s < 2) throw std::invalid_argument("zeta_p expansion needs s >= 2");
  require_large(x);
  const long p = x.prime();
  const long target = ctx.N;
  const long terms = bernoulli_series_terms(p, -x.valuation(), target);
  const long digits = coefficient_digits(p, target, terms) + floor_log(p, Integer(s));
  PAdic inv = x.inverse();
  PAdic sum = PAdic::exact(Rational(Integer(1), Integer(s - 1)), p, digits);
  PAdic power = inv;
  for (long j = 1; j <= terms; ++j) {
    Rational b = bernoulli(j);
    if (!b.is_zero()) sum -= power * PAdic::exact(Rational(binomial(-s, j - 1)) * b / Rational(j), p, digits);
    power *= inv;
  }
  return (angle_power(x, 1 - s) * sum).with_precision(target);
}

PAdic zeta_p_negative(long m, const PAdic& x) {
  if (m < 1) throw std::invalid_argument("zeta_p_negative needs m >= 1");
  require_nonzero(x);
  const long p = x.prime();
  const long digits = x.relative_precision() + 4 + floor_log(p, Integer(m));
  PAdic inv = x.inverse();
  PAdic sum = PAdic::exact(Rational(Integer(-1), Integer(m)), p, digits);
  PAdic power = inv;
  for (long j = 1; j <= m; ++j) {
    Rational b = bernoulli(j);
    if (!b.is_zero()) sum -= power * PAdic::exact(Rational(binomial(m - 1, j - 1)) * b / Rational(j), p, digits);
    power *= inv;
  }
  return angle_power(x, m) * sum;
}

PAdic zeta_p_one(const PAdic& x, const PrecisionContext& ctx) {
  require_large(x);
  const long p = x.prime();
  const long target = ctx.N;
  const long terms = bernoulli_series_terms(p, -x.valuation(), target);
  const long digits = coefficient_digits(p, target, terms);
  PAdic inv = x.inverse();
  PAdic sum = -log_p(angle(x), ctx);
  PAdic power = inv;
  for (long j = 1; j <= terms; ++j) {
    Rational b = bernoulli(j);
    if (!b.is_zero()) {
      Rational c = b / Rational(j);
      if (j % 2 == 1) c = -c;
      sum += power * PAdic::exact(c, p, digits);
    }
    power *= inv;
  }
  return sum.with_precision(target);
}

PAdicExt ttilde_p(long s, const PAdic& x, const PAdicExt::Field& field, const PrecisionContext& ctx) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  check_field(x, field);
  const long p = x.prime();
  const long e = field->order();
  const long digits = ctx.N + ctx.guard + 16;
  const bool twisted = p == 2 && x.valuation() == -1 && s > 1;
  PAdicExt sum = PAdicExt::from_padic(field, PAdic::zero(p, ctx.N));
  for (long j = 0; j < e; ++j) {
    PAdic y = shifted_over_e(x, j, e, digits);
    PAdic value = s == 1 ? zeta_p_one(y, ctx) : zeta_p(s, y, ctx);
    if (twisted && ((s - 1) * j) % 2 == 1) value = -value;
    sum += xi_power(field, -j, digits) * PAdicExt::from_padic(field, value);
  }
  return sum.with_precision(ctx.N);
}

PAdicExt t_p(long s, const PAdic& x, const PAdicExt::Field& field, const PrecisionContext& ctx) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  check_field(x, field);
  const long p = x.prime();
  const long e = field->order();
  const long digits = ctx.N + ctx.guard + 16;
  PAdicExt sum = PAdicExt::from_padic(field, PAdic::zero(p, ctx.N));
  for (long j = 0; j < e; ++j) {
    PAdic y = shifted_over_e(x, j, e, digits);
    PAdic value;
    if (s == 1) {
      value = zeta_p_one(y, ctx) * PAdic::exact(Rational(Integer(1), Integer(e)), p, digits);
    } else {
      PAdic factor = pow(y, 1 - s) * angle_power(y, s - 1) *
                     PAdic::exact(pow(Rational(e), -s), p, digits);
      value = factor * zeta_p(s, y, ctx);
    }
    sum += xi_power(field, -j, digits) * PAdicExt::from_padic(field, value);
  }
  return sum.with_precision(ctx.N);
}

PAdicExt t_p_series(long s, const PAdic& x, const PAdicExt::Field& field, const PrecisionContext& ctx) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  check_field(x, field);
  const long p = x.prime();
  const long e = field->order();
  const long target = ctx.N;
  const long w = -x.valuation();
  const long terms = bernoulli_series_terms(p, w, target);
  const long digits = coefficient_digits(p, target, terms) + floor_log(p, Integer(s));
  PAdicExt sum = PAdicExt::from_padic(field, PAdic::zero(p, target));
  for (long l = 0; l < e; ++l) {
    PAdic shifted = x + PAdic::exact(Rational(l), p, digits);
    PAdic inv = shifted.inverse();
    PAdic value = PAdic::zero(p, target + 4);
    if (s > 1) {
      value = pow(inv, s - 1) * PAdic::exact(Rational(Integer(1), Integer(e * (s - 1))), p, digits);
    } else if (l > 0) {
      PAdic u = PAdic::exact(Rational(1), p, digits) + PAdic::exact(Rational(l), p, digits) * x.inverse();
      value = -log_p(u, PrecisionContext(p, target + 4, 0)) * PAdic::exact(Rational(Integer(1), Integer(e)), p, digits);
    }
    PAdic power = pow(inv, s);  // (x + l)^{1 - s - j} at j = 1
    Rational e_power(1);
    for (long j = 1; j <= terms; ++j) {
      Rational b = bernoulli(j);
      if (!b.is_zero()) {
        Rational c = s > 1 ? Rational(binomial(-s, j - 1)) * e_power * b / Rational(j)
                           : e_power * b / Rational(j) * Rational(j % 2 == 1 ? -1 : 1);
        if (s > 1) c = -c;
        value += power * PAdic::exact(c, p, digits);
      }
      power *= inv;
      e_power *= Rational(e);
    }
    sum += xi_power(field, -l, digits) * PAdicExt::from_padic(field, value);
  }
  return sum.with_precision(target);
}

std::vector<CycloElement> theta_coefficients(long s, long e, long last) {
  if (s < 1 || last < 0) throw std::invalid_argument("theta coefficients need s >= 1 and a nonnegative range");
  if (e < 2) throw std::invalid_argument("theta coefficients need e >= 2");
  // sigma[m] = sum_{l<e} xi^{-l} l^m with 0^0 = 1; head[m] omits l = 0.
  std::vector<CycloElement> sigma(last + 1), head(last + 1);
  for (long m = 0; m <= last; ++m) {
    CycloElement acc = CycloElement::rational(e, Rational());
    for (long l = 1; l < e; ++l)
      acc += cyclo_power(e, -l) * CycloElement(Rational(ipow(l, static_cast<unsigned long>(m))));
    head[m] = acc;
    sigma[m] = m == 0 ? acc + CycloElement(1L) : acc;
  }
  const Rational er(e);
  std::vector<CycloElement> out(last + 1, CycloElement::rational(e, Rational()));
  for (long k = 0; k <= last; ++k) {
    CycloElement& a = out[k];
    if (s == 1) {
      if (k == 0) continue;
      a += head[k] * CycloElement(Rational(Integer(k % 2 == 0 ? 1 : -1), Integer(e * k)));
      for (long j = 1; j <= k; ++j) {
        Rational b = bernoulli(j);
        if (b.is_zero()) continue;
        Rational c = pow(er, j - 1) * b / Rational(j) * Rational(binomial(-j, k - j));
        if (j % 2 == 1) c = -c;
        a += sigma[k - j] * CycloElement(c);
      }
      continue;
    }
    if (k < s) continue;
    const long m = k - s + 1;
    a += sigma[m] * CycloElement(-Rational(binomial(-s, m - 1)) / Rational(e * m));
    for (long j = 1; j <= m; ++j) {
      Rational b = bernoulli(j);
      if (b.is_zero()) continue;
      Rational c = pow(er, j - 1) * b / Rational(j) * Rational(binomial(-s, j - 1)) *
                   Rational(binomial(1 - s - j, m - j));
      a -= sigma[m - j] * CycloElement(c);
    }
  }
  return out;
}

CycloElement theta_coeff(long k, long s, long e) {
  if (k < 0) throw std::invalid_argument("theta_coeff needs k >= 0");
  return theta_coefficients(s, e, k).back();
}

}  // namespace padelin
