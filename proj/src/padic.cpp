#include "padelin/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padelin {

PrecisionContext::PrecisionContext(long prime, long precision, long guard_digits)
    : p(prime), N(precision), guard(guard_digits) {
  if (!is_prime(prime)) throw std::invalid_argument("p must be prime");
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  if (guard_digits < 0) throw std::invalid_argument("guard digits must be >= 0");
}

Integer prime_power(long p, long k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return out;
}

PAdic PAdic::zero(long p, long precision) {
  PAdic out;
  out.p_ = p;
  out.prec_ = precision;
  return out;
}

PAdic PAdic::normalized(long p, long val, Integer u, long prec) {
  if (prec <= val) return zero(p, prec);
  Integer mod = prime_power(p, prec - val);
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  if (u == 0) return zero(p, prec);
  Integer pz = p;
  long k = static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t()));
  val += k;
  if (k > 0) {
    mod = prime_power(p, prec - val);
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  }
  PAdic out;
  out.p_ = p;
  out.zero_ = false;
  out.val_ = val;
  out.unit_ = std::move(u);
  out.prec_ = prec;
  return out;
}

PAdic PAdic::from_rational(const Rational& r, long p, long precision) {
  if (r.is_zero()) return zero(p, precision);
  long v = padelin::valuation(r, p);
  if (precision <= v) return zero(p, precision);
  Integer pz = p;
  Integer num = r.num();
  Integer den = r.den();
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  Integer mod = prime_power(p, precision - v);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  return normalized(p, v, num * inv, precision);
}

PAdic PAdic::exact(const Rational& r, long p, long relative_digits) {
  if (r.is_zero()) return zero(p, relative_digits);
  return from_rational(r, p, padelin::valuation(r, p) + relative_digits);
}

Rational PAdic::to_rational() const {
  if (zero_) return Rational();
  if (val_ >= 0) return Rational(Integer(unit_ * prime_power(p_, val_)));
  return Rational(unit_, prime_power(p_, -val_));
}

std::vector<long> PAdic::unit_digits() const {
  std::vector<long> out;
  if (zero_) return out;
  Integer u = unit_;
  Integer q;
  for (long i = 0; i < prec_ - val_; ++i) {
    unsigned long d = mpz_fdiv_q_ui(q.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
    out.push_back(static_cast<long>(d));
    u = q;
  }
  return out;
}

PAdic PAdic::with_precision(long cap) const {
  if (cap >= prec_) return *this;
  if (zero_) return zero(p_, cap);
  return normalized(p_, val_, unit_, cap);
}

PAdic PAdic::inverse() const {
  if (zero_) throw std::domain_error("p-adic inverse of a value indistinguishable from zero");
  long rel = prec_ - val_;
  Integer mod = prime_power(p_, rel);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return normalized(p_, -val_, std::move(inv), -val_ + rel);
}

PAdic PAdic::operator-() const {
  if (zero_) return *this;
  return normalized(p_, val_, -unit_, prec_);
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_) throw std::domain_error("mixing different primes");
  long prec = std::min(a.prec_, b.prec_);
  if (a.zero_) return b.with_precision(prec);
  if (b.zero_) return a.with_precision(prec);
  long v = std::min(a.val_, b.val_);
  if (prec <= v) return PAdic::zero(a.p_, prec);
  Integer sum = a.unit_ * prime_power(a.p_, a.val_ - v) + b.unit_ * prime_power(a.p_, b.val_ - v);
  return PAdic::normalized(a.p_, v, std::move(sum), prec);
}

PAdic operator*(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_) throw std::domain_error("mixing different primes");
  if (a.zero_ && b.zero_) return PAdic::zero(a.p_, a.prec_ + b.prec_);
  if (a.zero_) return PAdic::zero(a.p_, a.prec_ + b.val_);
  if (b.zero_) return PAdic::zero(a.p_, b.prec_ + a.val_);
  long rel = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
  long v = a.val_ + b.val_;
  return PAdic::normalized(a.p_, v, a.unit_ * b.unit_, v + rel);
}

bool PAdic::agrees_with(const PAdic& o, long cap) const {
  PAdic d = (*this - o).with_precision(cap);
  return d.is_zero();
}

std::string PAdic::str() const {
  std::ostringstream os;
  if (zero_) {
    os << "0";
  } else {
    if (val_ != 0) os << p_ << "^" << val_ << " * ";
    os << "[";
    auto d = unit_digits();
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
    os << "]";
  }
  os << " + O(" << p_ << "^" << prec_ << ")";
  return os.str();
}

PAdic pow(const PAdic& base, long k) {
  if (k < 0) return pow(base.inverse(), -k);
  PAdic out = PAdic::exact(Rational(1), base.prime(), std::max(base.relative_precision(), 1L));
  if (base.is_zero() && k > 0) return PAdic::zero(base.prime(), base.precision() * k);
  PAdic b = base;
  while (k > 0) {
    if (k & 1L) out *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return out;
}

}  // namespace padelin
