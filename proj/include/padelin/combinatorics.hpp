#pragma once

#include <vector>

#include "padelin/poly.hpp"
#include "padelin/rational.hpp"

namespace padelin {

/// Bernoulli number B_m with B_1 = -1/2. Memoized and thread-safe.
Rational bernoulli(long m);

/// Bernoulli polynomial B_m(x) = sum_j C(m, j) B_j x^{m-j}.
Poly<Rational> bernoulli_polynomial(long m);

/// lcm(1, ..., n).
Integer lcm_upto(long n);

/// Distinct prime divisors in increasing order.
std::vector<long> prime_factors(long b);

/// b^n * prod_{q | b prime} q^{floor(n / (q - 1))}.
Integer mu(long b, long n);

/// Multiplicative order of p modulo e (gcd(p, e) = 1, e >= 1).
long multiplicative_order(long p, long e);

/// Rising factorial (t)_m = t (t + 1) ... (t + m - 1).
template <class T>
T pochhammer(const T& t, long m) {
  T out = T(Rational(1));
  for (long j = 0; j < m; ++j) out = out * (t + T(Rational(j)));
  return out;
}

inline Poly<Rational> pochhammer(const Poly<Rational>& t, long m) {
  Poly<Rational> out = Poly<Rational>::constant(Rational(1));
  for (long j = 0; j < m; ++j) out *= t + Poly<Rational>::constant(Rational(j));
  return out;
}

struct AritmuReport {
  bool is_int1 = false;
  bool is_int2 = false;
};

/// Checks that ((a/b)_n / n!) mu_n(b) and ((a/b)_{n+1} / (n! (a/b + k))) mu_n(b) d_n
/// are integers. Throws std::domain_error when a/b + k = 0 and
/// std::invalid_argument when gcd(a, b) != 1.
AritmuReport aritmu_check(long a, long b, long n, long k);

}  // namespace padelin
