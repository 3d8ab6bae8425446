#include "padelin/combinatorics.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace padelin {

namespace {

// Tangent numbers T_1..T_n by the in-place integer recurrence, then
// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> even_bernoulli_table(long half) {
  std::vector<Integer> t(half + 1);
  if (half >= 1) t[1] = 1;
  for (long k = 2; k <= half; ++k) t[k] = (k - 1) * t[k - 1];
  for (long k = 2; k <= half; ++k)
    for (long j = k; j <= half; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  std::vector<Rational> out(half + 1);
  out[0] = Rational(1);
  for (long k = 1; k <= half; ++k) {
    Integer four_k = ipow(4, static_cast<unsigned long>(k));
    Integer num = 2 * k * t[k];
    if (k % 2 == 0) num = -num;
    out[k] = Rational(num, four_k * (four_k - 1));
  }
  return out;
}

}  // namespace

Rational bernoulli(long m) {
  if (m < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  if (m == 1) return Rational(Integer(-1), Integer(2));
  if (m % 2 == 1) return Rational();
  static std::mutex mutex;
  static std::vector<Rational> table;
  std::lock_guard lock(mutex);
  long half = m / 2;
  if (static_cast<long>(table.size()) <= half) {
    long want = std::max(half, 2 * static_cast<long>(table.size()));
    table = even_bernoulli_table(want);
  }
  return table[half];
}

Poly<Rational> bernoulli_polynomial(long m) {
  std::vector<Rational> c(m + 1);
  for (long j = 0; j <= m; ++j) c[m - j] = Rational(binomial(m, j)) * bernoulli(j);
  return Poly<Rational>(std::move(c));
}

Integer lcm_upto(long n) {
  if (n < 1) throw std::invalid_argument("lcm_upto needs n >= 1");
  static std::mutex mutex;
  static std::vector<Integer> table{Integer(1), Integer(1)};
  std::lock_guard lock(mutex);
  while (static_cast<long>(table.size()) <= n) {
    Integer k = static_cast<long>(table.size());
    Integer next;
    mpz_lcm(next.get_mpz_t(), table.back().get_mpz_t(), k.get_mpz_t());
    table.push_back(next);
  }
  return table[n];
}

std::vector<long> prime_factors(long b) {
  if (b < 1) throw std::invalid_argument("prime_factors needs b >= 1");
  std::vector<long> out;
  for (long q = 2; q * q <= b; ++q) {
    if (b % q != 0) continue;
    out.push_back(q);
    while (b % q == 0) b /= q;
  }
  if (b > 1) out.push_back(b);
  return out;
}

Integer mu(long b, long n) {
  if (b < 1) throw std::invalid_argument("mu needs b >= 1");
  if (n < 0) throw std::invalid_argument("mu needs n >= 0");
  Integer out = ipow(b, static_cast<unsigned long>(n));
  for (long q : prime_factors(b)) out *= ipow(q, static_cast<unsigned long>(n / (q - 1)));
  return out;
}

long multiplicative_order(long p, long e) {
  if (e < 1) throw std::invalid_argument("modulus must be positive");
  if (std::gcd(p, e) != 1) throw std::invalid_argument("p and e must be coprime");
  if (e == 1) return 1;
  long r = ((p % e) + e) % e;
  long acc = r;
  long k = 1;
  while (acc != 1) {
    acc = static_cast<long>((static_cast<__int128>(acc) * r) % e);
    ++k;
  }
  return k;
}

AritmuReport aritmu_check(long a, long b, long n, long k) {
  if (b < 1) throw std::invalid_argument("b must be positive");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("gcd(a, b) must be 1");
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("need n >= 1 and 0 <= k <= n");
  const Rational x{Integer(a), Integer(b)};
  Rational shifted = x + Rational(k);
  if (shifted.is_zero()) throw std::domain_error("x + k vanishes");
  Rational nf(factorial(static_cast<unsigned long>(n)));
  Rational m(mu(b, n));
  Rational first = pochhammer(x, n) / nf * m;
  Rational second = pochhammer(x, n + 1) / (nf * shifted) * m * Rational(lcm_upto(n));
  return {first.is_integer(), second.is_integer()};
}

}  // namespace padelin
