#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "padelin/rational.hpp"

namespace padelin {

long euler_phi(long e);

/// Integer coefficients of the e-th cyclotomic polynomial, constant term first.
/// Memoized; safe to call from several threads.
const std::vector<Integer>& cyclotomic_polynomial(long e);

/// Element of Q(xi_e) in the power basis 1, xi, ..., xi^{phi(e)-1}.
///
/// e = 1 is the field Q itself; rationals (including the default zero)
/// combine with elements of any order.
class CycloElement {
 public:
  CycloElement() : e_(1), c_(1) {}
  CycloElement(long v) : CycloElement(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  CycloElement(int v) : CycloElement(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  CycloElement(const Rational& v) : e_(1), c_{v} {}  // NOLINT(google-explicit-constructor)
  CycloElement(const Integer& v) : CycloElement(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  /// Reduces an arbitrary coefficient vector (in powers of xi) modulo Phi_e.
  CycloElement(long e, std::vector<Rational> coeffs);

  /// The rational r viewed in Q(xi_e).
  static CycloElement rational(long e, const Rational& r);

  long order() const { return e_; }
  /// Coordinates, exactly phi(order()) of them.
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational; throws if it is not one.
  Rational to_rational() const;

  CycloElement inverse() const;

  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  CycloElement& operator/=(const CycloElement& o) { return *this *= o.inverse(); }

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  friend CycloElement operator/(CycloElement a, const CycloElement& b) { return a /= b; }
  friend CycloElement operator-(const CycloElement& a);

  friend bool operator==(const CycloElement& a, const CycloElement& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CycloElement& v) { return os << v.str(); }

 private:
  void promote_to(long e);
  void reduce(std::vector<Rational> raw);

  long e_;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycloElement& v) { return v.is_zero(); }

CycloElement pow(const CycloElement& v, long k);

/// The class of X modulo Phi_e, i.e. a primitive e-th root of unity.
CycloElement cyclo_root(long e);

/// xi^k for any integer k.
CycloElement cyclo_power(long e, long k);

/// Value under xi -> exp(2 pi i / e). Arithmetic is done in long double,
/// so precision_bits beyond its mantissa has no further effect.
std::complex<long double> embed_complex(const CycloElement& v, int precision_bits = 53);

/// ln |embed_complex(v)|, computed with a common power-of-two scaling so that
/// values outside the long double range are still handled.
long double log_abs_embedded(const CycloElement& v);

}  // namespace padelin
