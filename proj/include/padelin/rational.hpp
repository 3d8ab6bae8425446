#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace padelin {

using Integer = mpz_class;

/// Valuation reported for zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max() / 4;

/// Exact signed rational, always in lowest terms with positive denominator.
///
/// Wraps mpq_class so that every arithmetic result is a canonical Rational
/// rather than a GMP expression template.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a", "a/b" or "-a/b".
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

Rational pow(const Rational& base, long exponent);

/// p-adic valuation; kInfiniteValuation for zero.
long valuation(const Integer& v, long p);
long valuation(const Rational& r, long p);

/// Integer power p^k (k >= 0).
Integer ipow(long base, unsigned long k);

/// Generalized binomial coefficient C(top, k) for integer top (possibly negative), k >= 0.
Integer binomial(long top, long k);

Integer factorial(unsigned long n);

/// floor(log_p(m)) for m >= 1.
long floor_log(long p, const Integer& m);

bool is_prime(long n);

}  // namespace padelin
