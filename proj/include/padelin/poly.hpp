#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace padelin {

/// Degree of the zero polynomial. Never -1, so a "degree <= d" test cannot
/// silently accept the zero polynomial through integer arithmetic.
inline constexpr long kDegreeOfZero = std::numeric_limits<long>::min();

namespace detail {

// Called from class templates whose own is_zero member would hide the scalar overload.
template <class T>
bool scalar_is_zero(const T& v) {
  return is_zero(v);
}

}  // namespace detail

/// Dense univariate polynomial; coeffs()[i] multiplies x^i.
///
/// Scalar requirements: value-initialised T is the additive zero, `detail::scalar_is_zero(T)`
/// is found by ADL, and T supports + - * and unary minus. divmod additionally
/// needs division by a nonzero scalar.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  /// c * x^k
  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  /// The polynomial x + shift.
  static Poly x_plus(T shift) { return Poly(std::vector<T>{std::move(shift), T(1)}); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return c_.empty() ? kDegreeOfZero : static_cast<long>(c_.size()) - 1; }

  /// Coefficient of x^i (zero beyond the stored range).
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) {
    for (auto& c : a.c_) c = s * c;
    a.trim();
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at a point of any type U that accepts T on the left.
  template <class U>
  U operator()(const U& at) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }

  /// Euclidean division by a nonzero divisor: *this = q * d + r, deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = c_;
    if (rem.size() < d.c_.size()) return {Poly(), *this};
    std::vector<T> quo(rem.size() - d.c_.size() + 1);
    const T& lead = d.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      T f = rem[k + d.c_.size() - 1] / lead;
      quo[k] = f;
      if (detail::scalar_is_zero(f)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = rem[k + j] - f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Formal derivative.
  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero();
}

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned long k) {
  Poly<T> out = Poly<T>::constant(T(1));
  Poly<T> b = base;
  while (k > 0) {
    if (k & 1UL) out *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return out;
}

}  // namespace padelin
