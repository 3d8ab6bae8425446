#include "padelin/rational.hpp"

#include <stdexcept>
#include <string>

namespace padelin {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    Integer n(s.substr(0, slash), 10);
    Integer d(s.substr(slash + 1), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(n, d);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("zero denominator") != std::string::npos) throw;
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

long valuation(const Integer& v, long p) {
  if (v == 0) return kInfiniteValuation;
  mpz_class pz(p);
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()));
}

long valuation(const Rational& r, long p) {
  if (r.is_zero()) return kInfiniteValuation;
  return valuation(r.num(), p) - valuation(r.den(), p);
}

Integer ipow(long base, unsigned long k) {
  Integer out;
  mpz_class b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), k);
  return out;
}

Integer binomial(long top, long k) {
  if (k < 0) return 0;
  Integer out;
  mpz_class t(top);
  mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

long floor_log(long p, const Integer& m) {
  if (m < 1) throw std::domain_error("floor_log of nonpositive value");
  long k = 0;
  Integer acc = p;
  while (acc <= m) {
    acc *= p;
    ++k;
  }
  return k;
}

bool is_prime(long n) {
  if (n < 2) return false;
  mpz_class z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace padelin
