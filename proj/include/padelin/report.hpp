#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "padelin/certify.hpp"
#include "padelin/padic.hpp"
#include "padelin/padic_ext.hpp"
#include "padelin/pade.hpp"

namespace padelin {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "padelin-report/1";

Json to_json(const Rational& r);
Json to_json(const CycloElement& v);
Json to_json(const PAdic& v);
Json to_json(const PAdicExt& v);
Json to_json(const PadeSystem& sys);
Json to_json(const DeterminantCertificate& c);
Json to_json(const IntegralityReport& r);
Json to_json(const LinearFormValue& v);
Json to_json(const BoundReport& r);
Json to_json(const ScanReport& r);
Json to_json(const SlopeReport& r);

const char* to_string(BoundVariant v);

enum class FaultTarget { none, determinant, integrality, remainder };
FaultTarget parse_fault_target(const std::string& name);
const char* to_string(FaultTarget t);

struct IntegralityCase {
  long n = 0, A = 0, q = 0, a = 0, b = 1, p = 2, e = 2;
};

/// Seeded tuples with n <= 20, A in {2, 3}, b <= 50, p in {2, 3, 5, 7, 13}, gcd(e, p) = 1.
std::vector<IntegralityCase> random_integrality_cases(std::uint64_t seed, std::size_t count);

struct SuiteConfig {
  std::vector<std::pair<long, long>> determinant_grid;  ///< (A, n)
  std::vector<long> remainder_orders{2, 3};             ///< e values for the remainder check
  long remainder_extra = 10;                            ///< truncation K = A n + extra
  std::size_t integrality_cases = 50;
  std::uint64_t seed = 1;
  // p-adic decay of the linear forms.
  long decay_p = 5, decay_e = 2, decay_a = 2, decay_b = 5, decay_A = 2;
  std::vector<long> decay_q{0, 1, 2};
  long decay_n_min = 8, decay_n_max = 24;
  long precision = 64;
  long guard = 4;
  long max_precision = 4096;
  unsigned threads = 0;  ///< 0: hardware concurrency
  FaultTarget fault = FaultTarget::none;

  /// A in {2, 3}: (2, 3..8) and (3, 2..5).
  static SuiteConfig defaults();
};

struct DecayRow {
  long q = 0, n = 0;
  long valuation = 0;
  long threshold = 0;
  long working_precision = 0;
  bool series_agrees = false;
  bool coefficient_bound = false;
  bool passed = false;
};

struct SuiteResult {
  Json bundle;
  Json manifest;
  bool ok = true;
  std::string first_failure;
  std::vector<DecayRow> decay;
};

/// Lower bound A n w - 8 on v_p(U_n), w = -v_p(a/b).
long decay_threshold(long A, long n, long w);

/// Runs determinant, remainder, integrality and decay checks over the grid on a
/// bounded worker pool. The bundle depends only on the config.
SuiteResult run_certify_suite(const SuiteConfig& config);

Json to_json(const SuiteConfig& config);

/// Valuation table "q,n,valuation,threshold,series_agrees,passed".
std::string decay_csv(const SuiteResult& result);

}  // namespace padelin
