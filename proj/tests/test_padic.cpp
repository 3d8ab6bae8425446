#include <doctest.h>

#include <random>

#include "padelin/padic.hpp"
#include "padelin/zeta.hpp"

using namespace padelin;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 2001) - 1000;
  long den = 1 + static_cast<long>(rng() % 500);
  if (num == 0) num = 1;
  return Rational(Integer(num), Integer(den));
}

}  // namespace

TEST_CASE("construction from rationals") {
  auto v = PAdic::from_rational(Rational(Integer(3), Integer(2)), 5, 20);
  CHECK(v.valuation() == 0);
  CHECK(v.precision() == 20);
  CHECK(v.unit_digits().front() == 4);
  CHECK(v.str() == "[4 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2] + O(5^20)");
  auto w = PAdic::exact(Rational(Integer(2), Integer(25)), 5, 4);
  CHECK(w.valuation() == -2);
  CHECK(w.precision() == 2);
  CHECK(w.str() == "5^-2 * [2 0 0 0] + O(5^2)");
  auto z = PAdic::from_rational(Rational(125), 5, 3);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 3);
  CHECK(z.str() == "0 + O(5^3)");
}

TEST_CASE("arithmetic agrees with exact rationals") {
  std::mt19937_64 rng(31);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 40; ++i) {
      Rational x = random_rational(rng), y = random_rational(rng);
      PAdic a = PAdic::exact(x, p, 30), b = PAdic::exact(y, p, 30);
      CHECK((a + b).agrees_with(PAdic::exact(x + y, p, 60)));
      CHECK((a * b).agrees_with(PAdic::exact(x * y, p, 60)));
      CHECK((a / b).agrees_with(PAdic::exact(x / y, p, 60)));
      CHECK((a * b).relative_precision() == 30);
      CHECK((a * b).valuation() == valuation(x * y, p));
    }
  }
}

TEST_CASE("precision bookkeeping") {
  PAdic a = PAdic::from_rational(Rational(1), 5, 10);
  PAdic b = PAdic::from_rational(Rational(Integer(1), Integer(5)), 5, 4);
  CHECK((a + b).precision() == 4);
  PAdic z = PAdic::zero(5, 6);
  PAdic c = PAdic::exact(Rational(Integer(1), Integer(25)), 5, 10);
  CHECK((z * c).precision() == 4);
  CHECK((z * c).is_zero());
  CHECK_THROWS_AS(z.inverse(), std::domain_error);
  PAdic d = PAdic::from_rational(Rational(Integer(26)), 5, 10);
  CHECK((d - PAdic::from_rational(Rational(1), 5, 10)).valuation() == 2);
  CHECK(d.with_precision(3).precision() == 3);
}

TEST_CASE("powers") {
  PAdic x = PAdic::exact(Rational(Integer(2), Integer(5)), 5, 20);
  CHECK(pow(x, 3).agrees_with(PAdic::exact(Rational(Integer(8), Integer(125)), 5, 40)));
  CHECK((pow(x, -2) * pow(x, 2)).agrees_with(PAdic::exact(Rational(1), 5, 40)));
  CHECK(prime_power(3, 4) == 81);
}

TEST_CASE("Teichmuller representatives") {
  PrecisionContext ctx(5, 20, 4);
  CHECK(teichmuller(PAdic::exact(Rational(1), 5, 24), ctx).agrees_with(PAdic::exact(Rational(1), 5, 40)));
  auto w2 = teichmuller(PAdic::exact(Rational(2), 5, 24), ctx);
  CHECK(w2.agrees_with(PAdic::from_rational(Rational(7), 5, 2)));
  CHECK(pow(w2, 4).agrees_with(PAdic::exact(Rational(1), 5, 40), 20));
  PrecisionContext ctx2(2, 20, 4);
  CHECK(teichmuller(PAdic::exact(Rational(3), 2, 24), ctx2).agrees_with(PAdic::exact(Rational(-1), 2, 40)));
  auto w = teichmuller(PAdic::exact(Rational(Integer(3), Integer(5)), 5, 24), ctx);
  CHECK(w.valuation() == -1);
  CHECK_THROWS(teichmuller(PAdic::zero(5, 10), ctx));

  std::mt19937_64 rng(8);
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    PrecisionContext c(p, 20, 4);
    for (int i = 0; i < 10; ++i) {
      long u = 1 + static_cast<long>(rng() % 10000);
      if (u % p == 0) continue;
      auto om = teichmuller(PAdic::exact(Rational(u), p, 30), c);
      CHECK(pow(om, p == 2 ? 2 : p - 1).agrees_with(PAdic::exact(Rational(1), p, 40), 20));
      CHECK((PAdic::exact(Rational(u), p, 30) - om).valuation() >= (p == 2 ? 2 : 1));
    }
  }
}

TEST_CASE("angle") {
  PAdic x = PAdic::exact(Rational(7), 5, 20);
  auto a = angle(x);
  CHECK((a - PAdic::exact(Rational(1), 5, 20)).valuation() >= 1);
  CHECK(angle(PAdic::exact(Rational(35), 5, 20)).agrees_with(a));
  CHECK(angle(PAdic::exact(Rational(1), 5, 20)).agrees_with(PAdic::exact(Rational(1), 5, 40)));
  CHECK(angle_power(x, 0).agrees_with(PAdic::exact(Rational(1), 5, 40)));
  CHECK(angle_power(x, 1).agrees_with(a));
  CHECK((angle_power(x, -2) * angle_power(x, 2)).agrees_with(PAdic::exact(Rational(1), 5, 40)));
}

TEST_CASE("p-adic logarithm") {
  PrecisionContext ctx(5, 10, 4);
  CHECK(log_p(PAdic::exact(Rational(1), 5, 20), ctx).is_zero());
  auto l = log_p(PAdic::exact(Rational(6), 5, 30), ctx);
  Rational partial;
  for (long k = 1; k <= 40; ++k) partial += Rational(k % 2 ? 1 : -1) * pow(Rational(5), k) / Rational(k);
  CHECK(l.precision() >= 10);
  CHECK(l.agrees_with(PAdic::from_rational(partial, 5, 30), 10));
  CHECK_THROWS(log_p(PAdic::exact(Rational(2), 5, 20), ctx));
  std::mt19937_64 rng(2);
  for (long p : {2L, 3L, 7L}) {
    PrecisionContext c(p, 20, 4);
    for (int i = 0; i < 10; ++i) {
      long k = 1 + static_cast<long>(rng() % 1000);
      Rational u = Rational(1) + Rational(p == 2 ? 4 : p) * Rational(k);
      auto lu = log_p(PAdic::exact(u, p, 30), c);
      CHECK(log_p(PAdic::exact(u * u, p, 30), c).agrees_with(lu + lu, 20));
    }
  }
}
