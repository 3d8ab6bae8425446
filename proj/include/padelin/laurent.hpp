#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "padelin/poly.hpp"

namespace padelin {

/// Truncated Laurent series in 1/x:
///   sum_{k = start}^{K} c_k x^{-k} + O(x^{-K-1}),
/// where K is the truncation order (nullopt: the sum is exact, i.e. finite).
template <class T>
class LaurentTail {
 public:
  LaurentTail() = default;
  LaurentTail(long start, std::vector<T> coeffs, std::optional<long> truncation)
      : start_(start), c_(std::move(coeffs)), trunc_(truncation) {
    normalize();
  }

  /// Exact series of a polynomial in x: the x^i coefficient lands at k = -i.
  static LaurentTail from_poly(const Poly<T>& p) {
    if (p.is_zero()) return LaurentTail(0, {}, std::nullopt);
    long d = p.degree();
    std::vector<T> c(d + 1);
    for (long i = 0; i <= d; ++i) c[d - i] = p.coeffs()[i];
    return LaurentTail(-d, std::move(c), std::nullopt);
  }

  long start() const { return start_; }
  const std::vector<T>& coeffs() const { return c_; }
  std::optional<long> truncation() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }

  /// Coefficient of x^{-k}; throws when k lies beyond the truncation order.
  T operator[](long k) const {
    if (trunc_ && k > *trunc_) throw std::out_of_range("coefficient beyond truncation order");
    if (k < start_ || k >= start_ + static_cast<long>(c_.size())) return T{};
    return c_[k - start_];
  }

  LaurentTail truncated(long K) const {
    std::optional<long> t = trunc_ ? std::min(*trunc_, K) : K;
    std::vector<T> c;
    for (long k = start_; k <= *t && k < start_ + static_cast<long>(c_.size()); ++k) c.push_back(c_[k - start_]);
    return LaurentTail(start_, std::move(c), t);
  }

  friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) { return combine(a, b, false); }
  friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b) { return combine(a, b, true); }

  friend LaurentTail operator*(const LaurentTail& a, const T& s) {
    LaurentTail out = a;
    for (auto& c : out.c_) c = c * s;
    out.normalize();
    return out;
  }

  /// Truncation of the product is min(K_a + k_b, K_b + k_a) with k the start orders.
  friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
    std::optional<long> t;
    if (a.trunc_) t = *a.trunc_ + b.start_;
    if (b.trunc_) t = t ? std::min(*t, *b.trunc_ + a.start_) : *b.trunc_ + a.start_;
    if (a.c_.empty() || b.c_.empty()) return LaurentTail(0, {}, t);
    long start = a.start_ + b.start_;
    long last = a.start_ + static_cast<long>(a.c_.size()) - 1 + b.start_ + static_cast<long>(b.c_.size()) - 1;
    if (t) last = std::min(last, *t);
    if (last < start) return LaurentTail(start, {}, t);
    std::vector<T> c(last - start + 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        long k = start + static_cast<long>(i + j);
        if (k > last) break;
        c[k - start] = c[k - start] + a.c_[i] * b.c_[j];
      }
    }
    return LaurentTail(start, std::move(c), t);
  }

 private:
  static LaurentTail combine(const LaurentTail& a, const LaurentTail& b, bool subtract) {
    std::optional<long> t = a.trunc_;
    if (b.trunc_) t = t ? std::min(*t, *b.trunc_) : b.trunc_;
    long start = std::min(a.start_, b.start_);
    long last = std::max(a.start_ + static_cast<long>(a.c_.size()), b.start_ + static_cast<long>(b.c_.size())) - 1;
    if (t) last = std::min(last, *t);
    std::vector<T> c(last >= start ? last - start + 1 : 0);
    for (long k = start; k <= last; ++k) {
      T va = (k >= a.start_ && k < a.start_ + static_cast<long>(a.c_.size())) ? a.c_[k - a.start_] : T{};
      T vb = (k >= b.start_ && k < b.start_ + static_cast<long>(b.c_.size())) ? b.c_[k - b.start_] : T{};
      c[k - start] = subtract ? va - vb : va + vb;
    }
    return LaurentTail(start, std::move(c), t);
  }

  void normalize() {
    if (trunc_) {
      long keep = *trunc_ - start_ + 1;
      if (keep < static_cast<long>(c_.size())) c_.resize(std::max(0L, keep));
    }
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && detail::scalar_is_zero(c_[lead])) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      start_ += static_cast<long>(lead);
    }
  }

  long start_ = 0;
  std::vector<T> c_;
  std::optional<long> trunc_;
};

}  // namespace padelin
