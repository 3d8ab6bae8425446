#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "padelin/rational.hpp"

namespace padelin {

/// Prime, working absolute precision N (values known modulo p^N) and the
/// number of guard digits certified comparisons may give up.
struct PrecisionContext {
  long p = 5;
  long N = 20;
  long guard = 4;

  PrecisionContext() = default;
  PrecisionContext(long prime, long precision, long guard_digits = 4);

  /// Absolute precision at which two independently computed values are compared.
  long certified() const { return N - guard; }
};

/// Element of Q_p known modulo p^precision().
///
/// Nonzero values are p^valuation * unit with unit a p-adic unit stored
/// modulo p^(precision - valuation). A value that is zero to its known
/// precision keeps only that precision.
class PAdic {
 public:
  PAdic() = default;

  static PAdic zero(long p, long precision);
  /// r modulo p^precision (absolute).
  static PAdic from_rational(const Rational& r, long p, long precision);
  /// r with relative_digits significant digits (zero is exact to that many digits).
  static PAdic exact(const Rational& r, long p, long relative_digits);
  static PAdic from_integer(const Integer& v, long p, long precision) {
    return from_rational(Rational(v), p, precision);
  }

  long prime() const { return p_; }
  /// True when the value is zero modulo p^precision().
  bool is_zero() const { return zero_; }
  /// Exact valuation for nonzero values; for a zero, the known lower bound precision().
  long valuation() const { return zero_ ? prec_ : val_; }
  long precision() const { return prec_; }
  long relative_precision() const { return zero_ ? 0 : prec_ - val_; }
  const Integer& unit() const { return unit_; }

  /// Representative p^valuation * unit as a rational.
  Rational to_rational() const;
  /// Base-p digits of the unit, least significant first.
  std::vector<long> unit_digits() const;

  /// Same value known only modulo p^min(precision(), cap).
  PAdic with_precision(long cap) const;

  PAdic inverse() const;
  PAdic operator-() const;

  PAdic& operator+=(const PAdic& o) { return *this = *this + o; }
  PAdic& operator-=(const PAdic& o) { return *this = *this - o; }
  PAdic& operator*=(const PAdic& o) { return *this = *this * o; }
  PAdic& operator/=(const PAdic& o) { return *this = *this * o.inverse(); }

  friend PAdic operator+(const PAdic& a, const PAdic& b);
  friend PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }
  friend PAdic operator*(const PAdic& a, const PAdic& b);
  friend PAdic operator/(const PAdic& a, const PAdic& b) { return a * b.inverse(); }

  /// a and b agree modulo p^min(a.precision(), b.precision(), cap).
  bool agrees_with(const PAdic& o, long cap = kInfiniteValuation) const;

  /// e.g. "5^-1 * [3 4 0 2] + O(5^20)"; digits little-endian.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const PAdic& v) { return os << v.str(); }

 private:
  static PAdic normalized(long p, long val, Integer u, long prec);

  long p_ = 2;
  bool zero_ = true;
  long val_ = 0;
  Integer unit_ = 0;
  long prec_ = 0;
};

inline bool is_zero(const PAdic& v) { return v.is_zero(); }

/// Binary powering; negative exponents go through inverse().
PAdic pow(const PAdic& base, long k);

/// p^k as an Integer (k >= 0).
Integer prime_power(long p, long k);

}  // namespace padelin
