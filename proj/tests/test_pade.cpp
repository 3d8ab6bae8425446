#include <doctest.h>

#include <cmath>
#include <random>

#include "padelin/combinatorics.hpp"
#include "padelin/pade.hpp"

using namespace padelin;

namespace {

std::vector<std::array<long, 3>> grid() {
  std::vector<std::array<long, 3>> out;
  for (long A = 2; A <= 3; ++A)
    for (long n = 1; n <= 8; ++n) {
      if (A * n < n + 3) continue;
      for (long q = 0; q <= A; ++q) out.push_back({n, A, q});
    }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_pade(2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_pade(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_pade(3, 2, 3), std::invalid_argument);
  CHECK_NOTHROW(build_pade(3, 2, 0));
}

TEST_CASE("partial fractions reconstruct the rational function") {
  std::mt19937_64 rng(77);
  for (auto [n, A, q] : std::vector<std::array<long, 3>>{{3, 2, 0}, {4, 2, 2}, {2, 3, 1}, {3, 3, 3}, {5, 2, 1}}) {
    auto r = residue_coeffs(n, A, q);
    for (int i = 0; i < 20; ++i) {
      Rational x{Integer(static_cast<long>(rng() % 200) - 100), Integer(1 + static_cast<long>(rng() % 37))};
      Rational k{Integer(static_cast<long>(rng() % 200) - 100), Integer(1 + static_cast<long>(rng() % 41))};
      Rational sum;
      bool pole = false;
      for (long j = 0; j <= n; ++j) {
        Rational d = k + x + Rational(j);
        if (d.is_zero()) pole = true;
        if (pole) break;
        for (long s = 1; s <= A; ++s) sum += r[j][s](x) / pow(d, s);
      }
      if (pole) continue;
      CHECK(sum == rational_function_value(n, A, q, x, k));
    }
  }
}

TEST_CASE("residues at the last pole") {
  for (auto [n, A, q] : grid()) {
    auto r = residue_coeffs(n, A, q);
    for (long s = q + 1; s <= A; ++s) CHECK(r[n][s].is_zero());
    if (q >= 1) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(n * 100 + A * 10 + q));
      Rational x{Integer(static_cast<long>(rng() % 50) + 1), Integer(7)};
      Rational lead = pow(Rational(factorial(n)), A - 1) * pochhammer(-Rational(n) - x, n + 1) /
                      pow(pochhammer(Rational(-n), n), A);
      CHECK(r[n][q](x) == lead);
    }
  }
}

TEST_CASE("degree statements hold across the grid") {
  for (auto [n, A, q] : grid()) {
    auto sys = build_pade(n, A, q);
    CHECK_NOTHROW(check_pade_degrees(sys));
    for (long s = 1; s <= A; ++s) {
      CHECK(sys.P[s].deg_x() <= n + 1);
      CHECK(sys.P[s].deg_z() <= (s > q ? n - 1 : n));
    }
    CHECK(sys.P[0].deg_x() <= n);
    if (q >= 1) {
      CHECK(sys.P[q].deg_z() == n);
      CHECK_FALSE(sys.P[q].z_coefficient(n).is_zero());
    }
  }
  auto sys = build_pade(2, 3, 1);
  CHECK(sys.P[0].deg_x() <= 2);
  CHECK(build_pade(3, 2, 2).P[2].deg_z() == 3);
}

TEST_CASE("a corrupted system is rejected") {
  auto sys = build_pade(3, 2, 1);
  sys.P[2].add_term(Rational(1), 0, 3);
  CHECK_THROWS_AS(check_pade_degrees(sys), std::logic_error);
}

TEST_CASE("P_0 cancels the partial sums") {
  // P_0(x, z) = -sum_{s,j} r_{j,s}(x) z^j sum_{k<j} z^{-k}/(k + x)^s, checked at rational points.
  std::mt19937_64 rng(4);
  for (auto [n, A, q] : std::vector<std::array<long, 3>>{{3, 2, 0}, {2, 3, 1}, {4, 2, 2}}) {
    auto sys = build_pade(n, A, q);
    for (int i = 0; i < 5; ++i) {
      Rational x{Integer(1 + static_cast<long>(rng() % 40)), Integer(3)};
      Rational z{Integer(static_cast<long>(rng() % 19) - 9), Integer(4)};
      if (z.is_zero()) continue;
      Rational expected;
      for (long s = 1; s <= A; ++s)
        for (long j = 0; j <= n; ++j)
          for (long k = 0; k < j; ++k)
            expected -= sys.r[j][s](x) * pow(z, j - k) / pow(x + Rational(k), s);
      CHECK(sys.P[0].substitute_z(z)(x) == expected);
    }
  }
}

TEST_CASE("remainder series vanishes below the predicted order") {
  for (auto [n, A, q] : grid())
    for (long e : {2L, 3L}) {
      auto rs = remainder_series(build_pade(n, A, q), e, A * n + 10);
      const long bound = A * (n - 1) - 3;
      CHECK(rs.vanishing_bound() == bound);
      for (long k = -n; k < bound; ++k) CHECK(rs.at(k).is_zero());
      CHECK(rs.first_nonzero() >= bound);
      CHECK(rs.first_nonzero() <= rs.truncation);
    }
  auto rs = remainder_series(build_pade(5, 2, 0), 2, 20);
  for (long k = -5; k <= 4; ++k) CHECK(rs.at(k).is_zero());
  auto rs3 = remainder_series(build_pade(2, 3, 0), 2, 20);
  for (long k = -2; k < 0; ++k) CHECK(rs3.at(k).is_zero());
  CHECK_THROWS_AS(remainder_series(build_pade(5, 2, 0), 2, 3), std::invalid_argument);
}

TEST_CASE("a perturbed system breaks the remainder vanishing") {
  auto sys = build_pade(4, 2, 0);
  sys.P[0].add_term(Rational(1), 1, 1);
  CHECK_THROWS_AS(remainder_series(sys, 2, 20), std::logic_error);
}

TEST_CASE("floating point identity") {
  for (long q = 0; q <= 2; ++q)
    CHECK(numeric_identity_check(build_pade(3, 2, q), 2, Rational(Integer(3), Integer(2)), 100000) <= 1e-8L);
  CHECK(numeric_identity_check(build_pade(2, 3, 0), 3, Rational(2), 100000) <= 1e-8L);
  auto sys = build_pade(3, 2, 0);
  double l10 = std::log(static_cast<double>(remainder_magnitude(sys, 2, 10, 100000)));
  double l20 = std::log(static_cast<double>(remainder_magnitude(sys, 2, 20, 100000)));
  double l40 = std::log(static_cast<double>(remainder_magnitude(sys, 2, 40, 100000)));
  const double order = -2.0 * 3 + 3 + 3;
  CHECK((l20 - l10) / std::log(2.0) < order);
  CHECK((l40 - l20) / std::log(2.0) < order);
}

TEST_CASE("evaluation at a root of unity") {
  auto sys = build_pade(3, 2, 1);
  const Rational x{Integer(2), Integer(5)};
  for (long s = 0; s <= 2; ++s) {
    auto direct = evaluate(sys.P[s], x, cyclo_root(3));
    CHECK(at_root(sys.P[s], 3)(CycloElement(x)) == direct);
  }
  CHECK(evaluate(sys.P[1], x, CycloElement(-1)) == CycloElement(sys.P[1].substitute_z(Rational(-1))(x)));
}
