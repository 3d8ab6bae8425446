#include <doctest.h>

#include <numeric>

#include "padelin/report.hpp"

using namespace padelin;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.determinant_grid = {{2, 3}, {3, 2}};
  c.integrality_cases = 4;
  c.decay_n_min = 8;
  c.decay_n_max = 9;
  c.decay_q = {0, 2};
  c.seed = 5;
  return c;
}

}  // namespace

TEST_CASE("p-adic values serialise with digits and precision") {
  auto j = to_json(PAdic::exact(Rational(Integer(2), Integer(25)), 5, 4));
  CHECK(j["p"] == 5);
  CHECK(j["valuation"] == -2);
  CHECK(j["unitDigits"] == Json::array({2, 0, 0, 0}));
  CHECK(j["knownPrecision"] == 2);
  CHECK(to_json(PAdic::zero(3, 7))["valuation"] == "+inf");
  auto field = UnramifiedExtension::make(3, 5, 10);
  auto ext = to_json(PAdicExt::from_cyclo(field, cyclo_root(3), 6));
  CHECK(ext["degree"] == 2);
  CHECK(ext["modulusDigits"].size() == 3);
  CHECK(ext["coords"].size() == 2);
}

TEST_CASE("approximation systems serialise in canonical order") {
  auto j = to_json(build_pade(3, 2, 1));
  CHECK(j["n"] == 3);
  REQUIRE(j["P"].size() == 3);
  for (const auto& poly : j["P"]) {
    long last_z = -1, last_x = -1;
    for (const auto& t : poly["terms"]) {
      long x = t[0], z = t[1];
      CHECK((z > last_z || (z == last_z && x > last_x)));
      last_z = z;
      last_x = x;
      CHECK(t[2].is_string());
      CHECK(t[3].is_string());
    }
  }
}

TEST_CASE("determinant certificates serialise gamma as strings") {
  auto j = to_json(determinant_certificate(3, 2));
  CHECK(j["verified"] == true);
  CHECK(j["gamma"]["numerator"].is_string());
  CHECK(j["gamma"]["denominator"].is_string());
  CHECK_FALSE(j.contains("seconds"));
  auto bad = to_json(determinant_certificate(3, 2, true));
  CHECK(bad["gamma"].is_null());
  CHECK(bad["failure"].get<std::string>().find("factorization mismatch") == 0);
}

TEST_CASE("fault targets") {
  CHECK(parse_fault_target("integrality") == FaultTarget::integrality);
  CHECK(std::string(to_string(FaultTarget::remainder)) == "remainder");
  CHECK_THROWS_AS(parse_fault_target("everything"), std::invalid_argument);
}

TEST_CASE("seeded integrality cases") {
  auto a = random_integrality_cases(3, 50), b = random_integrality_cases(3, 50);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].a == b[i].a);
    CHECK(a[i].n <= 20);
    CHECK(a[i].A <= 3);
    CHECK(a[i].b <= 50);
    CHECK(std::gcd(a[i].a, a[i].b) == 1);
    CHECK(std::gcd(a[i].e, a[i].p) == 1);
    CHECK(a[i].A * a[i].n >= a[i].n + 3);
  }
  auto c = random_integrality_cases(4, 50);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].a != c[i].a || a[i].n != c[i].n;
  CHECK(differs);
}

TEST_CASE("suite reports are deterministic") {
  auto config = small_config();
  config.threads = 3;
  auto first = run_certify_suite(config);
  config.threads = 1;
  auto second = run_certify_suite(config);
  CHECK(first.ok);
  CHECK(first.bundle.dump() == second.bundle.dump());
  CHECK(first.bundle["schema"] == kReportSchema);
  CHECK(first.bundle["determinants"].size() == 2);
  CHECK(first.manifest["seed"] == 5);
  CHECK(decay_csv(first).rfind("q,n,valuation,threshold,series_agrees,passed\n", 0) == 0);
  CHECK(first.decay.size() == 4);
  for (const auto& row : first.decay) {
    CHECK(row.threshold == decay_threshold(2, row.n, 1));
    CHECK(row.passed);
  }
}

TEST_CASE("suite reports the first falsified certificate") {
  for (auto fault : {FaultTarget::determinant, FaultTarget::integrality, FaultTarget::remainder}) {
    auto config = small_config();
    config.fault = fault;
    auto result = run_certify_suite(config);
    CHECK_FALSE(result.ok);
    CHECK_FALSE(result.first_failure.empty());
    CHECK(result.bundle["status"]["ok"] == false);
  }
}
