#include "padelin/cyclo.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "padelin/poly.hpp"

namespace padelin {

long euler_phi(long e) {
  if (e < 1) throw std::invalid_argument("euler_phi needs e >= 1");
  long result = e;
  long m = e;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<Integer> compute_cyclotomic(long e) {
  // X^e - 1 divided by Phi_d for every proper divisor d; all divisors are monic.
  std::vector<Integer> num(e + 1);
  num[0] = -1;
  num[e] = 1;
  for (long d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<Integer> quo(num.size() - dd);
    for (std::size_t k = quo.size(); k-- > 0;) {
      Integer f = num[k + dd];
      quo[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= f * div[j];
    }
    num = std::move(quo);
  }
  return num;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long e) {
  if (e < 1) throw std::invalid_argument("cyclotomic polynomial needs e >= 1");
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<std::vector<Integer>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(e); it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<std::vector<Integer>>(compute_cyclotomic(e));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(e, std::move(value));
  return *it->second;
}

CycloElement::CycloElement(long e, std::vector<Rational> coeffs) : e_(e) {
  if (e < 1) throw std::invalid_argument("root order must be positive");
  reduce(std::move(coeffs));
}

CycloElement CycloElement::rational(long e, const Rational& r) {
  CycloElement out(r);
  out.promote_to(e);
  return out;
}

void CycloElement::reduce(std::vector<Rational> raw) {
  const auto& phi = cyclotomic_polynomial(e_);
  std::size_t d = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > d;) {
    Rational f = raw[k];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= d; ++j) raw[k - d + j] -= f * Rational(phi[j]);
  }
  raw.resize(d);
  c_ = std::move(raw);
}

bool CycloElement::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational CycloElement::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
  return c_.empty() ? Rational() : c_[0];
}

void CycloElement::promote_to(long e) {
  if (e == e_) return;
  if (e_ != 1) throw std::domain_error("mixing elements of different cyclotomic fields");
  Rational r = c_[0];
  e_ = e;
  c_.assign(static_cast<std::size_t>(euler_phi(e)), Rational());
  c_[0] = r;
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  if (o.e_ == 1 && e_ != 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  promote_to(o.e_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  if (o.e_ == 1 && e_ != 1) {
    c_[0] -= o.c_[0];
    return *this;
  }
  promote_to(o.e_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  if (o.e_ == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (e_ == 1) {
    Rational r = c_[0];
    *this = o;
    for (auto& c : c_) c *= r;
    return *this;
  }
  if (e_ != o.e_) throw std::domain_error("mixing elements of different cyclotomic fields");
  std::vector<Rational> raw(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
  }
  reduce(std::move(raw));
  return *this;
}

CycloElement operator-(const CycloElement& a) {
  CycloElement out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  if (a.e_ == b.e_) return a.c_ == b.c_;
  if (a.e_ != 1 && b.e_ != 1) return false;
  return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (e_ == 1 || is_rational()) return rational(e_, Rational(1) / c_[0]);
  std::vector<Rational> modulus;
  for (const auto& c : cyclotomic_polynomial(e_)) modulus.emplace_back(c);
  using P = Poly<Rational>;
  P r0(std::move(modulus)), r1(c_);
  P s0, s1 = P::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, std::move(r));
    P next = s0 - q * s1;
    s0 = std::exchange(s1, std::move(next));
  }
  // r0 is a nonzero constant because Phi_e is irreducible.
  Rational g = r0[0];
  std::vector<Rational> inv(s0.coeffs());
  for (auto& c : inv) c /= g;
  return CycloElement(e_, std::move(inv));
}

std::string CycloElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      os << "(" << c_[i] << ")*xi";
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

CycloElement pow(const CycloElement& v, long k) {
  if (k < 0) return pow(v.inverse(), -k);
  CycloElement out = CycloElement::rational(v.order(), Rational(1));
  CycloElement b = v;
  while (k > 0) {
    if (k & 1L) out *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return out;
}

CycloElement cyclo_root(long e) {
  if (e < 2) throw std::invalid_argument("cyclo_root needs e >= 2");
  return CycloElement(e, {Rational(0), Rational(1)});
}

CycloElement cyclo_power(long e, long k) {
  if (e == 1) return CycloElement(1L);
  long r = ((k % e) + e) % e;
  std::vector<Rational> raw(static_cast<std::size_t>(r) + 1);
  raw[r] = Rational(1);
  return CycloElement(e, std::move(raw));
}

namespace {

long double to_long_double(const mpq_class& q) {
  double hi = q.get_d();
  mpq_class rest = q - mpq_class(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::complex<long double> embed_scaled(const CycloElement& v, long shift) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(v.order());
  std::complex<long double> acc{0.0L, 0.0L};
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
    const auto& c = v.coeffs()[i];
    if (c.is_zero()) continue;
    mpq_class scaled = c.raw();
    if (shift > 0) mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    if (shift < 0) mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
    long double t = angle * static_cast<long double>(i);
    acc += to_long_double(scaled) * std::complex<long double>(std::cos(t), std::sin(t));
  }
  return acc;
}

}  // namespace

std::complex<long double> embed_complex(const CycloElement& v, int /*precision_bits*/) {
  return embed_scaled(v, 0);
}

long double log_abs_embedded(const CycloElement& v) {
  long shift = LONG_MIN;
  for (const auto& c : v.coeffs()) {
    if (c.is_zero()) continue;
    long bits = static_cast<long>(mpz_sizeinbase(c.num().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(c.den().get_mpz_t(), 2));
    shift = std::max(shift, bits);
  }
  if (shift == LONG_MIN) return -std::numeric_limits<long double>::infinity();
  auto z = embed_scaled(v, shift);
  return std::log(std::abs(z)) + static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

}  // namespace padelin
