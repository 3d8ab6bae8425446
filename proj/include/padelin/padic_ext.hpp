#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "padelin/cyclo.hpp"
#include "padelin/padic.hpp"

namespace padelin {

/// Q_p(xi_e) for gcd(e, p) = 1, realised as Q_p[Y]/(g) where g is a monic
/// irreducible factor of Phi_e over Q_p, known modulo p^precision.
/// xi is the class of Y.
class UnramifiedExtension {
 public:
  static std::shared_ptr<const UnramifiedExtension> make(long e, long p, long precision);

  long order() const { return e_; }
  long prime() const { return p_; }
  long degree() const { return static_cast<long>(modulus_.size()) - 1; }
  long precision() const { return precision_; }
  /// Coefficients of g, constant term first, reduced into [0, p^precision).
  const std::vector<Integer>& modulus() const { return modulus_; }

 private:
  UnramifiedExtension() = default;

  long e_ = 1;
  long p_ = 2;
  long precision_ = 0;
  std::vector<Integer> modulus_;
};

/// Irreducible factors of Phi_e modulo p, each monic of degree ord_e(p),
/// sorted by coefficient vector. Exposed for testing.
std::vector<std::vector<long>> cyclotomic_factors_mod_p(long e, long p);

/// Element of Q_p(xi_e) in the basis 1, Y, ..., Y^{f-1}.
class PAdicExt {
 public:
  using Field = std::shared_ptr<const UnramifiedExtension>;

  PAdicExt() = default;
  PAdicExt(Field field, std::vector<PAdic> coords);

  static PAdicExt from_padic(Field field, const PAdic& v);
  /// Image of an element of Q(xi_e); coefficients enter with `precision` absolute digits.
  static PAdicExt from_cyclo(Field field, const CycloElement& v, long precision);

  const Field& field() const { return field_; }
  const std::vector<PAdic>& coords() const { return coords_; }

  /// Minimum of the coordinate valuations (exact because the extension is unramified).
  long valuation() const;
  long precision() const;
  bool is_zero() const;
  /// The value when it lies in Q_p (all higher coordinates zero to precision).
  PAdic to_padic() const;

  PAdicExt with_precision(long cap) const;
  bool agrees_with(const PAdicExt& o, long cap = kInfiniteValuation) const;

  friend PAdicExt operator+(const PAdicExt& a, const PAdicExt& b);
  friend PAdicExt operator-(const PAdicExt& a, const PAdicExt& b);
  friend PAdicExt operator*(const PAdicExt& a, const PAdicExt& b);
  friend PAdicExt operator*(const PAdicExt& a, const PAdic& s);
  friend PAdicExt operator*(const PAdic& s, const PAdicExt& a) { return a * s; }
  PAdicExt operator-() const;
  PAdicExt& operator+=(const PAdicExt& o) { return *this = *this + o; }
  PAdicExt& operator*=(const PAdicExt& o) { return *this = *this * o; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const PAdicExt& v) { return os << v.str(); }

 private:
  Field field_;
  std::vector<PAdic> coords_;
};

}  // namespace padelin
