#include <doctest.h>

#include <numeric>
#include <random>

#include "padelin/combinatorics.hpp"
#include "padelin/zeta.hpp"

using namespace padelin;

namespace {

Rational gen_binomial(long top, long m) {
  Rational out(1);
  for (long i = 0; i < m; ++i) out = out * Rational(top - i) / Rational(i + 1);
  return out;
}

// Root of unity congruent to the unit u, found by Newton iteration on X^{p-1} = 1.
PAdic root_of_unity(const PAdic& u, long digits) {
  const long p = u.prime();
  const PAdic one = PAdic::exact(Rational(1), p, digits);
  if (p == 2) {
    Integer r = u.unit() % 4;
    return r == 1 ? one : -one;
  }
  Integer t = u.unit() % p;
  PAdic x = PAdic::from_rational(Rational(t), p, digits);
  for (int i = 0; i < 12; ++i) {
    PAdic xp = pow(x, p - 2);
    x = x - (xp * x - one) / (PAdic::exact(Rational(p - 1), p, digits) * xp);
    x = x.with_precision(digits);
  }
  return x;
}

// zeta_p(s, x) summed straight from its Laurent series with a generous cutoff.
PAdic direct_zeta(long s, const Rational& x, long p, long digits) {
  const long v = valuation(x, p);
  PAdic px = PAdic::exact(x, p, digits + 10);
  PAdic unit = PAdic::exact(x / pow(Rational(p), v), p, digits + 10);
  PAdic bracket = px / root_of_unity(unit, digits + 10) / PAdic::exact(pow(Rational(p), v), p, digits + 10);
  PAdic factor = pow(bracket, 1 - s);
  Rational sum = Rational(1) / Rational(s - 1);
  for (long j = 1; j <= 3 * digits + 20; ++j)
    sum -= gen_binomial(-s, j - 1) * bernoulli(j) / Rational(j) * pow(x, -j);
  return (factor * PAdic::exact(sum, p, digits + 10)).with_precision(digits);
}

// Coefficients of x^{-k}, k <= last, of e^{-s} sum_l xi^{-l} H(s, (x + l)/e), where H is the
// Hurwitz asymptotic series y^{1-s}/(s-1) + y^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} y^{1-s-2j}
// (for s = 1, -log y + 1/(2y) + sum_j B_{2j}/(2j) y^{-2j}).
std::vector<CycloElement> hurwitz_expansion(long s, long e, long last) {
  std::vector<CycloElement> out(last + 1);
  // add c * (x + l)^{-t} for every l, weighted by xi^{-l}
  auto add_power = [&](const Rational& c, long t) {
    for (long l = 0; l < e; ++l)
      for (long m = 0; t + m <= last; ++m) {
        Rational lm = m == 0 ? Rational(1) : pow(Rational(l), m);
        out[t + m] += cyclo_power(e, -l) * CycloElement(c * gen_binomial(-t, m) * lm);
      }
  };
  const Rational es = pow(Rational(e), -s);
  if (s >= 2) {
    add_power(es * pow(Rational(e), s - 1) / Rational(s - 1), s - 1);
    add_power(es * pow(Rational(e), s) / Rational(2), s);
    for (long j = 1; s + 2 * j - 1 <= last; ++j)
      add_power(es * pow(Rational(e), s + 2 * j - 1) * bernoulli(2 * j) / Rational(factorial(2 * j)) *
                    pochhammer(Rational(s), 2 * j - 1),
                s + 2 * j - 1);
  } else {
    const Rational inv_e = Rational(Integer(1), Integer(e));
    for (long l = 0; l < e; ++l)
      for (long m = 1; m <= last; ++m)
        out[m] -= cyclo_power(e, -l) * CycloElement(inv_e * Rational(m % 2 ? 1 : -1) * pow(Rational(l), m) / Rational(m));
    add_power(inv_e * Rational(e) / Rational(2), 1);
    for (long j = 1; 2 * j <= last; ++j)
      add_power(inv_e * bernoulli(2 * j) / Rational(2 * j) * pow(Rational(e), 2 * j), 2 * j);
  }
  return out;
}

long min_coordinate_valuation(const CycloElement& v, long p) {
  long out = kInfiniteValuation;
  for (const auto& c : v.coeffs()) out = std::min(out, valuation(c, p));
  return out;
}

}  // namespace

TEST_CASE("zeta_p matches a direct summation at doubled precision") {
  for (auto [p, x] : std::vector<std::pair<long, Rational>>{{5, Rational(Integer(1), Integer(5))},
                                                            {3, Rational(Integer(2), Integer(9))},
                                                            {7, Rational(Integer(-3), Integer(7))},
                                                            {2, Rational(Integer(1), Integer(4))}}) {
    for (long s = 2; s <= 4; ++s) {
      PrecisionContext ctx(p, 20, 4);
      auto got = zeta_p(s, PAdic::exact(x, p, 40), ctx);
      CHECK(got.precision() >= 16);
      CHECK(got.agrees_with(direct_zeta(s, x, p, 40), 16));
    }
  }
}

TEST_CASE("zeta_p precision law") {
  const Rational x{Integer(3), Integer(25)};
  PrecisionContext lo(5, 15, 4), hi(5, 40, 4);
  for (long s = 2; s <= 5; ++s) {
    auto a = zeta_p(s, PAdic::exact(x, 5, 60), lo);
    auto b = zeta_p(s, PAdic::exact(x, 5, 60), hi);
    CHECK(a.agrees_with(b, lo.certified()));
  }
  CHECK_THROWS(zeta_p(2, PAdic::exact(Rational(Integer(3), Integer(2)), 5, 20), lo));
  CHECK_THROWS(zeta_p(1, PAdic::exact(x, 5, 20), lo));
}

TEST_CASE("finite values at s = 1 - m") {
  auto v = zeta_p_negative(1, PAdic::exact(Rational(Integer(1), Integer(5)), 5, 30));
  CHECK(v.agrees_with(PAdic::exact(Rational(Integer(3), Integer(2)), 5, 40), 20));
  for (long p : {3L, 5L, 7L}) {
    PrecisionContext ctx(p, 40, 4);
    for (long c : {1L, 2L, 7L}) {
      const Rational x{Integer(c), Integer(p)};
      PAdic px = PAdic::exact(x, p, 50);
      PAdic omega = teichmuller(px, ctx);
      for (long m = 1; m <= 6; ++m) {
        PAdic expected = -PAdic::exact(bernoulli_polynomial(m)(x) / Rational(m), p, 50) * pow(omega, -m);
        CHECK(zeta_p_negative(m, px).agrees_with(expected, 30));
      }
    }
  }
}

TEST_CASE("regularised value at s = 1") {
  const Rational x{Integer(1), Integer(5)};
  PrecisionContext lo(5, 15, 4), hi(5, 35, 4);
  auto a = zeta_p_one(PAdic::exact(x, 5, 60), lo);
  auto b = zeta_p_one(PAdic::exact(x, 5, 60), hi);
  CHECK(a.agrees_with(b, lo.certified()));
  PrecisionContext two(2, 20, 4);
  auto c = zeta_p_one(PAdic::exact(Rational(Integer(1), Integer(2)), 2, 40), two);
  CHECK(c.precision() >= two.certified());
  // the Bernoulli part is the s -> 1 limit of the s >= 2 tail: C(-1, j - 1) = (-1)^{j-1}
  for (long j = 1; j <= 10; ++j) CHECK(gen_binomial(-1, j - 1) == Rational(j % 2 ? 1 : -1));
}

TEST_CASE("twisted sum for e = 2 splits into two values") {
  PrecisionContext ctx(5, 20, 4);
  const Rational x{Integer(2), Integer(5)};
  auto field = UnramifiedExtension::make(2, 5, 80);
  auto tt = ttilde_p(2, PAdic::exact(x, 5, 40), field, ctx);
  auto a = zeta_p(2, PAdic::exact(x / Rational(2), 5, 40), ctx);
  auto b = zeta_p(2, PAdic::exact((x + Rational(1)) / Rational(2), 5, 40), ctx);
  CHECK(tt.to_padic().agrees_with(a - b, ctx.certified()));
}

TEST_CASE("normalised twisted sum at s = 1 carries a 1/e") {
  PrecisionContext ctx(7, 20, 4);
  for (long e : {2L, 3L, 4L}) {
    auto field = UnramifiedExtension::make(e, 7, 80);
    PAdic x = PAdic::exact(Rational(Integer(5), Integer(7)), 7, 40);
    auto t = t_p(1, x, field, ctx);
    auto tt = ttilde_p(1, x, field, ctx) * PAdic::exact(Rational(Integer(1), Integer(e)), 7, 40);
    CHECK(t.agrees_with(tt, ctx.certified()));
  }
}

TEST_CASE("t_p at x = 2/p") {
  for (long p : {5L, 7L, 11L}) {
    PrecisionContext ctx(p, 20, 4);
    auto field = UnramifiedExtension::make(2, p, 80);
    for (long s = 2; s <= 3; ++s) {
      auto t = t_p(s, PAdic::exact(Rational(Integer(2), Integer(p)), p, 40), field, ctx).to_padic();
      auto z1 = zeta_p(s, PAdic::exact(Rational(Integer(1), Integer(p)), p, 40), ctx);
      auto z2 = zeta_p(s, PAdic::exact(Rational(Integer(p + 2), Integer(2 * p)), p, 40), ctx);
      // omega((2/p + j)/2)^{1-s} = p^{s-1}, not 1: omega(1/p) = 1/p
      auto expected = PAdic::exact(pow(Rational(p), s - 1) * pow(Rational(2), -s), p, 40) * (z1 - z2);
      CHECK(t.agrees_with(expected, ctx.certified()));
    }
  }
}

TEST_CASE("two evaluations of t_p and the relation to the twisted sum") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 20) {
    static constexpr long primes[] = {2, 3, 5, 7};
    long p = primes[rng() % 4];
    long e = 2 + static_cast<long>(rng() % 5);
    if (std::gcd(e, p) != 1) continue;
    long s = 1 + static_cast<long>(rng() % 4);
    long a = static_cast<long>(rng() % 61) - 30;
    long k = 1 + static_cast<long>(rng() % 2);
    if (a % p == 0) continue;
    if (done == 0) p = 2, e = 3, a = 5, k = 1;
    Rational x(Integer(a), prime_power(p, k));
    PrecisionContext ctx(p, 20, 4);
    auto field = UnramifiedExtension::make(e, p, 80);
    PAdic px = PAdic::exact(x, p, 40);
    auto direct = t_p(s, px, field, ctx);
    auto series = t_p_series(s, px, field, ctx);
    CHECK(direct.agrees_with(series, ctx.certified()));
    PAdic scale = PAdic::exact(pow(Rational(e), -s), p, 40) *
                  pow(teichmuller(PAdic::exact(x / Rational(e), p, 40), ctx), 1 - s);
    CHECK(direct.agrees_with(ttilde_p(s, px, field, ctx) * scale, ctx.certified()));
    ++done;
  }
}

TEST_CASE("twisted sums reject bad inputs") {
  PrecisionContext ctx(5, 20, 4);
  auto field = UnramifiedExtension::make(2, 5, 60);
  CHECK_THROWS(t_p(2, PAdic::exact(Rational(Integer(2), Integer(3)), 5, 40), field, ctx));
  CHECK_THROWS(ttilde_p(0, PAdic::exact(Rational(Integer(2), Integer(5)), 5, 40), field, ctx));
}

TEST_CASE("expansion coefficients vanish below s") {
  for (long s = 1; s <= 4; ++s)
    for (long e : {2L, 3L, 5L})
      for (long k = 0; k < s; ++k) CHECK(theta_coeff(k, s, e).is_zero());
  CHECK(theta_coeff(0, 2, 2).is_zero());
}

TEST_CASE("expansion coefficients match the Hurwitz asymptotic series") {
  const long last = 14;
  for (long s = 1; s <= 4; ++s)
    for (long e : {2L, 3L, 4L, 6L}) {
      auto expected = hurwitz_expansion(s, e, last);
      auto got = theta_coefficients(s, e, last);
      REQUIRE(static_cast<long>(got.size()) == last + 1);
      for (long k = 0; k <= last; ++k) {
        CAPTURE(s);
        CAPTURE(e);
        CAPTURE(k);
        CHECK(got[k] == expected[k]);
        CHECK(theta_coeff(k, s, e) == got[k]);
      }
    }
}

TEST_CASE("p-adic size of the expansion coefficients") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    long k = 1 + static_cast<long>(rng() % 30);
    long s = 1 + static_cast<long>(rng() % 4);
    long e = 2 + static_cast<long>(rng() % 5);
    for (long p : {2L, 3L, 5L, 7L}) {
      if (std::gcd(e, p) != 1) continue;
      auto a = theta_coeff(k, s, e);
      if (a.is_zero()) continue;
      // |a|_p <= k p / |e|_p, with |e|_p = 1
      CHECK(pow(Rational(p), -min_coordinate_valuation(a, p)) <= Rational(k * p));
    }
  }
}
