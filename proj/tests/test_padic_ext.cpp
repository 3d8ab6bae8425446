#include <doctest.h>

#include <random>

#include "padelin/combinatorics.hpp"
#include "padelin/padic_ext.hpp"

using namespace padelin;

namespace {

std::vector<long> mul_mod(const std::vector<long>& a, const std::vector<long>& b, long p) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

CycloElement random_element(std::mt19937_64& rng, long e) {
  std::vector<Rational> c;
  for (long i = 0; i < euler_phi(e); ++i)
    c.emplace_back(Integer(static_cast<long>(rng() % 41) - 20), Integer(static_cast<long>(rng() % 6) + 1));
  return CycloElement(e, c);
}

}  // namespace

TEST_CASE("cyclotomic factors modulo p") {
  for (long e = 2; e <= 30; ++e)
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      if (e % p == 0) continue;
      auto factors = cyclotomic_factors_mod_p(e, p);
      const long f = multiplicative_order(p, e);
      std::vector<long> prod{1};
      for (const auto& g : factors) {
        CHECK(static_cast<long>(g.size()) - 1 == f);
        CHECK(g.back() == 1);
        prod = mul_mod(prod, g, p);
      }
      const auto& phi = cyclotomic_polynomial(e);
      REQUIRE(prod.size() == phi.size());
      for (std::size_t i = 0; i < phi.size(); ++i) {
        Integer r = phi[i] % p;
        if (r < 0) r += p;
        CHECK(prod[i] == r.get_si());
      }
    }
}

TEST_CASE("extension degrees and moduli") {
  auto f2 = UnramifiedExtension::make(2, 7, 30);
  CHECK(f2->degree() == 1);
  CHECK(f2->modulus() == std::vector<Integer>{1, 1});

  auto f4 = UnramifiedExtension::make(4, 5, 30);
  REQUIRE(f4->degree() == 1);
  Integer mod = prime_power(5, 30);
  Integer root = (mod - f4->modulus()[0]) % mod;
  CHECK((root * root + 1) % mod == 0);
  Integer r5 = root % 5;
  CHECK((r5 == 2 || r5 == 3));

  CHECK(UnramifiedExtension::make(3, 5, 30)->degree() == 2);
  CHECK(UnramifiedExtension::make(7, 2, 30)->degree() == 3);
  CHECK_THROWS_AS(UnramifiedExtension::make(10, 5, 30), std::invalid_argument);
}

TEST_CASE("the modulus divides the cyclotomic polynomial to precision") {
  for (auto [e, p] : std::vector<std::pair<long, long>>{{3, 5}, {7, 2}, {12, 5}, {9, 2}, {13, 3}}) {
    const long M = 40;
    auto field = UnramifiedExtension::make(e, p, M);
    auto xi = PAdicExt::from_cyclo(field, cyclo_root(e), M);
    PAdicExt acc = xi;
    for (long k = 1; k < e; ++k) acc = acc * xi;
    auto one = PAdicExt::from_padic(field, PAdic::exact(Rational(1), p, M));
    CHECK(acc.agrees_with(one, M - 2));
    CHECK((acc - one).valuation() >= M - 2);
  }
}

TEST_CASE("embedding of Q(xi) is a ring homomorphism") {
  std::mt19937_64 rng(12);
  for (auto [e, p] : std::vector<std::pair<long, long>>{{3, 5}, {5, 3}, {8, 3}, {7, 2}, {4, 5}}) {
    auto field = UnramifiedExtension::make(e, p, 60);
    for (int i = 0; i < 5; ++i) {
      CycloElement a = random_element(rng, e), b = random_element(rng, e);
      auto ea = PAdicExt::from_cyclo(field, a, 30), eb = PAdicExt::from_cyclo(field, b, 30);
      CHECK((ea * eb).agrees_with(PAdicExt::from_cyclo(field, a * b, 30), 25));
      CHECK((ea + eb).agrees_with(PAdicExt::from_cyclo(field, a + b, 30), 25));
    }
  }
}

TEST_CASE("fields built at different precisions interoperate") {
  auto low = UnramifiedExtension::make(3, 5, 20);
  auto high = UnramifiedExtension::make(3, 5, 50);
  auto a = PAdicExt::from_cyclo(low, cyclo_root(3), 15);
  auto b = PAdicExt::from_cyclo(high, cyclo_root(3), 40);
  CHECK(a.agrees_with(b));
  CHECK((a - b).field()->precision() == 20);
  auto other = UnramifiedExtension::make(3, 2, 20);
  CHECK_THROWS_AS(a + PAdicExt::from_cyclo(other, cyclo_root(3), 10), std::domain_error);
}
