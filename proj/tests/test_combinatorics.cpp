#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "padelin/combinatorics.hpp"

using namespace padelin;

TEST_CASE("Bernoulli numbers satisfy the defining recurrence") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(Integer(-1), Integer(2)));
  CHECK(bernoulli(12) == Rational(Integer(-691), Integer(2730)));
  for (long m = 1; m <= 40; ++m) {
    Rational sum;
    for (long j = 0; j <= m; ++j) sum += Rational(binomial(m + 1, j)) * bernoulli(j);
    CHECK(sum.is_zero());
  }
  for (long m = 3; m <= 41; m += 2) CHECK(bernoulli(m).is_zero());
}

TEST_CASE("Clausen-von Staudt denominators") {
  for (long m = 2; m <= 40; m += 2)
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      CHECK(valuation(bernoulli(m), p) >= -1);
      CHECK((valuation(bernoulli(m), p) == -1) == (m % (p - 1) == 0));
    }
}

TEST_CASE("Bernoulli polynomials") {
  for (long m = 1; m <= 10; ++m) {
    auto B = bernoulli_polynomial(m);
    CHECK(B(Rational(0)) == bernoulli(m));
    for (long x = -3; x <= 3; ++x) {
      Rational diff = B(Rational(x + 1)) - B(Rational(x));
      CHECK(diff == Rational(m) * pow(Rational(x), m - 1));
    }
  }
}

TEST_CASE("lcm of the first integers") {
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(6) == 60);
  Integer acc = 1;
  for (long n = 1; n <= 60; ++n) {
    acc = lcm(acc, Integer(n));
    CHECK(lcm_upto(n) == acc);
  }
  for (long n = 50; n <= 500; n += 50) {
    double r = std::log(lcm_upto(n).get_d()) / static_cast<double>(n);
    CHECK(r >= 0.6);
    CHECK(r <= 1.3);
  }
}

TEST_CASE("denominator normaliser mu") {
  CHECK(mu(1, 7) == 1);
  CHECK(mu(2, 3) == 64);
  CHECK(mu(6, 2) == 432);
  for (long b : {2L, 6L, 10L}) {
    Integer m = mu(b, 2000);
    double ln_mu = static_cast<double>(mpz_sizeinbase(m.get_mpz_t(), 2)) * std::log(2.0);
    double expected = std::log(static_cast<double>(b));
    for (long q : prime_factors(b)) expected += std::log(static_cast<double>(q)) / static_cast<double>(q - 1);
    CHECK(std::abs(ln_mu / 2000.0 - expected) < 0.05);
  }
}

TEST_CASE("pochhammer symbols") {
  CHECK(pochhammer(Rational(7), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 5) == Rational(120));
  CHECK(pochhammer(Rational(Integer(1), Integer(2)), 3) == Rational(Integer(15), Integer(8)));
  Poly<Rational> x{Rational(0), Rational(1)};
  auto p = pochhammer(x, 4);
  CHECK(p.degree() == 4);
  CHECK(p(Rational(3)) == Rational(360));
  CHECK(pochhammer(x, 0) == Poly<Rational>::constant(Rational(1)));
}

TEST_CASE("prime factors and multiplicative order") {
  CHECK(prime_factors(360) == std::vector<long>{2, 3, 5});
  CHECK(prime_factors(1).empty());
  CHECK(multiplicative_order(5, 3) == 2);
  CHECK(multiplicative_order(5, 4) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK_THROWS_AS(multiplicative_order(3, 6), std::invalid_argument);
}

TEST_CASE("arithmetic lemma examples") {
  for (auto [a, b, n, k] : std::vector<std::array<long, 4>>{{1, 1, 5, 2}, {2, 3, 4, 1}, {7, 10, 6, 0}}) {
    auto r = aritmu_check(a, b, n, k);
    CHECK(r.is_int1);
    CHECK(r.is_int2);
  }
  CHECK_THROWS_AS(aritmu_check(-2, 1, 4, 2), std::domain_error);
  CHECK_THROWS_AS(aritmu_check(2, 4, 4, 1), std::invalid_argument);
}

TEST_CASE("arithmetic lemma on random inputs") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 200) {
    long b = 1 + static_cast<long>(rng() % 50);
    long a = static_cast<long>(rng() % 201) - 100;
    long n = 1 + static_cast<long>(rng() % 30);
    long k = static_cast<long>(rng() % static_cast<std::uint64_t>(n + 1));
    if (std::gcd(a, b) != 1 || a + k * b == 0) continue;
    auto r = aritmu_check(a, b, n, k);
    CHECK(r.is_int1);
    CHECK(r.is_int2);
    ++checked;
  }
}
