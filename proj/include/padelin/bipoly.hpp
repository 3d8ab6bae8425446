#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "padelin/poly.hpp"

namespace padelin {

/// Exponent pair of a monomial x^x z^z. Ordered lexicographically with z
/// first, which is the monomial order used by BiPoly::exact_divide.
struct Monomial {
  long x = 0;
  long z = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.z != b.z ? a.z < b.z : a.x < b.x;
  }
};

/// Sparse bivariate polynomial in (x, z). No zero coefficient is ever stored.
template <class T>
class BiPoly {
 public:
  using Terms = std::map<Monomial, T>;

  BiPoly() = default;

  static BiPoly constant(T c) { return term(std::move(c), 0, 0); }
  static BiPoly term(T c, long dx, long dz) {
    BiPoly out;
    if (!detail::scalar_is_zero(c)) out.t_.emplace(Monomial{dx, dz}, std::move(c));
    return out;
  }
  /// Embeds a polynomial in x multiplied by z^dz.
  static BiPoly from_x_poly(const Poly<T>& p, long dz) {
    BiPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (!detail::scalar_is_zero(p.coeffs()[i])) out.t_.emplace(Monomial{static_cast<long>(i), dz}, p.coeffs()[i]);
    return out;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  T coefficient(long dx, long dz) const {
    auto it = t_.find(Monomial{dx, dz});
    return it == t_.end() ? T{} : it->second;
  }

  void add_term(const T& c, long dx, long dz) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = t_.emplace(Monomial{dx, dz}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::scalar_is_zero(it->second)) t_.erase(it);
    }
  }

  long deg_x() const {
    long d = kDegreeOfZero;
    for (const auto& [m, c] : t_) d = std::max(d, m.x);
    return d;
  }
  long deg_z() const { return t_.empty() ? kDegreeOfZero : t_.rbegin()->first.z; }
  /// Smallest exponent of x (resp. z) over all terms.
  long order_x() const {
    long d = kDegreeOfZero;
    for (const auto& [m, c] : t_) d = (d == kDegreeOfZero) ? m.x : std::min(d, m.x);
    return d;
  }
  long order_z() const { return t_.empty() ? kDegreeOfZero : t_.begin()->first.z; }

  /// Coefficient of z^dz as a polynomial in x.
  Poly<T> z_coefficient(long dz) const {
    std::vector<T> c;
    for (const auto& [m, v] : t_) {
      if (m.z != dz) continue;
      if (c.size() <= static_cast<std::size_t>(m.x)) c.resize(m.x + 1);
      c[m.x] = v;
    }
    return Poly<T>(std::move(c));
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(c, m.x, m.z);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(-c, m.x, m.z);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) {
    BiPoly out;
    for (const auto& [m, c] : a.t_) out.t_.emplace(m, -c);
    return out;
  }
  friend BiPoly operator*(const BiPoly& a, const T& s) {
    BiPoly out;
    if (detail::scalar_is_zero(s)) return out;
    for (const auto& [m, c] : a.t_) out.add_term(c * s, m.x, m.z);
    return out;
  }
  friend BiPoly operator*(const T& s, const BiPoly& a) { return a * s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) out.add_term(ca * cb, ma.x + mb.x, ma.z + mb.z);
    return out;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  /// Divides by x^dx z^dz; nullopt if some term has a smaller exponent.
  std::optional<BiPoly> divide_monomial(long dx, long dz) const {
    BiPoly out;
    for (const auto& [m, c] : t_) {
      if (m.x < dx || m.z < dz) return std::nullopt;
      out.t_.emplace(Monomial{m.x - dx, m.z - dz}, c);
    }
    return out;
  }

  /// Exact quotient *this / d, or nullopt when d does not divide *this.
  /// Requires a field of coefficients.
  std::optional<BiPoly> exact_divide(const BiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("bivariate division by zero");
    BiPoly rem = *this;
    BiPoly quo;
    const auto& [lead_m, lead_c] = *d.t_.rbegin();
    while (!rem.is_zero()) {
      const auto [rm, rc] = *rem.t_.rbegin();
      if (rm.x < lead_m.x || rm.z < lead_m.z) return std::nullopt;
      BiPoly step = term(rc / lead_c, rm.x - lead_m.x, rm.z - lead_m.z);
      quo += step;
      rem -= step * d;
    }
    return quo;
  }

  /// Substitutes z := value, giving a polynomial in x over U.
  template <class U>
  Poly<U> substitute_z(const U& value) const {
    std::vector<U> c;
    U power_cache{};
    long cached = -1;
    for (const auto& [m, v] : t_) {  // ascending z, so powers can be reused
      if (m.z != cached) {
        power_cache = upow(value, m.z);
        cached = m.z;
      }
      if (c.size() <= static_cast<std::size_t>(m.x)) c.resize(m.x + 1);
      c[m.x] = c[m.x] + U(v) * power_cache;
    }
    return Poly<U>(std::move(c));
  }

  /// Substitutes x := value, giving a polynomial in z over U.
  template <class U>
  Poly<U> substitute_x(const U& value) const {
    std::vector<U> c;
    for (const auto& [m, v] : t_) {
      if (c.size() <= static_cast<std::size_t>(m.z)) c.resize(m.z + 1);
      c[m.z] = c[m.z] + U(v) * upow(value, m.x);
    }
    return Poly<U>(std::move(c));
  }

 private:
  template <class U>
  static U upow(const U& v, long k) {
    U out(1L);
    for (long i = 0; i < k; ++i) out = out * v;
    return out;
  }

  Terms t_;
};

template <class T>
bool is_zero(const BiPoly<T>& p) {
  return p.is_zero();
}

}  // namespace padelin
