#include <doctest.h>

#include <random>

#include "padelin/bipoly.hpp"
#include "padelin/laurent.hpp"
#include "padelin/poly.hpp"
#include "padelin/rational.hpp"

using namespace padelin;
using PolyQ = Poly<Rational>;
using BiPolyQ = BiPoly<Rational>;

namespace {

PolyQ random_poly(std::mt19937_64& rng, long degree) {
  std::vector<Rational> c;
  for (long i = 0; i <= degree; ++i)
    c.emplace_back(Integer(static_cast<long>(rng() % 21) - 10), Integer(static_cast<long>(rng() % 5) + 1));
  if (c.back().is_zero()) c.back() = Rational(1);
  return PolyQ(c);
}

BiPolyQ random_bipoly(std::mt19937_64& rng, long dx, long dz) {
  BiPolyQ out;
  for (long i = 0; i <= dx; ++i)
    for (long j = 0; j <= dz; ++j)
      if (rng() % 3) out.add_term(Rational(static_cast<long>(rng() % 11) - 5), i, j);
  return out;
}

}  // namespace

TEST_CASE("division with remainder reconstructs the dividend") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    PolyQ a = random_poly(rng, 2 + static_cast<long>(rng() % 6));
    PolyQ d = random_poly(rng, 1 + static_cast<long>(rng() % 3));
    auto [q, r] = a.divmod(d);
    CHECK(q * d + r == a);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("polynomial evaluation and derivative") {
  PolyQ p{Rational(1), Rational(-3), Rational(0), Rational(2)};
  CHECK(p(Rational(2)) == Rational(11));
  CHECK(p.degree() == 3);
  CHECK(PolyQ().degree() == kDegreeOfZero);
  CHECK_THROWS_AS(p.divmod(PolyQ()), std::domain_error);
}

TEST_CASE("bivariate products and exact division") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    BiPolyQ a = random_bipoly(rng, 3, 2), b = random_bipoly(rng, 2, 3);
    if (is_zero(a) || is_zero(b)) continue;
    BiPolyQ prod = a * b;
    auto quotient = prod.exact_divide(b);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == a);
    CHECK(prod.deg_x() == a.deg_x() + b.deg_x());
    CHECK(prod.deg_z() == a.deg_z() + b.deg_z());
  }
}

TEST_CASE("exact division reports non-divisibility") {
  auto x = BiPolyQ::term(Rational(1), 1, 0), one = BiPolyQ::constant(Rational(1));
  CHECK_FALSE((x * x + one).exact_divide(x + one).has_value());
  CHECK((x * x - one).exact_divide(x + one).has_value());
}

TEST_CASE("bivariate substitution agrees with evaluation") {
  std::mt19937_64 rng(9);
  BiPolyQ a = random_bipoly(rng, 3, 3);
  const Rational x{Integer(2), Integer(7)}, z{Integer(-3), Integer(5)};
  Rational direct;
  for (const auto& [m, c] : a.terms()) direct += c * pow(x, m.x) * pow(z, m.z);
  CHECK(a.substitute_z(z)(x) == direct);
  CHECK(a.substitute_x(x)(z) == direct);
}

TEST_CASE("Laurent tails track truncation through products") {
  // (1 - 1/x)^{-1} truncated at 1/x^5, times x.
  LaurentTail<Rational> geo(0, std::vector<Rational>(6, Rational(1)), 5);
  auto x = LaurentTail<Rational>::from_poly(PolyQ{Rational(0), Rational(1)});
  auto prod = geo * x;
  CHECK(prod.start() == -1);
  REQUIRE(prod.truncation().has_value());
  CHECK(*prod.truncation() == 4);
  for (long k = -1; k <= 4; ++k) CHECK(prod[k] == Rational(1));
  CHECK_THROWS_AS(prod[5], std::out_of_range);
  auto one_minus = LaurentTail<Rational>(0, {Rational(1), Rational(-1)}, std::nullopt);
  auto unit = geo * one_minus;
  CHECK(unit[0] == Rational(1));
  for (long k = 1; k <= 5; ++k) CHECK(unit[k] == Rational(0));
  CHECK(*unit.truncation() == 5);
}
