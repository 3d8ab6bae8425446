#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "padelin/pade.hpp"
#include "padelin/padic_ext.hpp"

namespace padelin {

/// Raised when a computation cannot certify its result below the precision ceiling.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a bound is requested for parameters whose independence has not been certified.
class UncertifiedBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precision ceiling: PADELIN_MAX_PRECISION if set, else 4096 digits.
long max_precision_from_env();

using PolyMatrix = std::vector<std::vector<BiPolyQ>>;

/// Determinant of a square matrix of bivariate polynomials by fraction-free elimination.
BiPolyQ bareiss_determinant(PolyMatrix m);
/// Determinant by cofactor expansion along the first row.
BiPolyQ cofactor_determinant(const PolyMatrix& m);

struct DeterminantCertificate {
  long n = 0;
  long A = 0;
  bool verified = false;
  /// Set when verified; the constant left after removing x^A z^{n+1} (z - 1)^{(A-1)n-2}.
  Rational gamma;
  long deg_x = kDegreeOfZero;
  long deg_z = kDegreeOfZero;
  bool methods_agree = false;
  std::string failure;
  double seconds = 0;
};

/// Builds the (A+1) x (A+1) matrix (P_s^{(q)}), computes its determinant twice
/// and checks the factorization. `inject_fault` perturbs one entry first.
DeterminantCertificate determinant_certificate(long n, long A, bool inject_fault = false);

struct IntegralityFailure {
  int statement = 0;  ///< 1..4
  long s = 0;
  std::string where;
};

struct IntegralityReport {
  long n = 0, A = 0, q = 0, a = 0, b = 1, p = 2, e = 2;
  bool passed = false;
  std::vector<IntegralityFailure> failures;
};

/// Exact checks, with x = a/b and k = floor(n/(p-1)):
///  1. p^k d_n^{A-s} P_s(x, xi) has p-integral coefficients (as a polynomial in x),
///  2. p^k d_n^{A-1} P_0(x, xi) likewise,
///  3. b d_n^{A-s} mu_n(b) P_s(a/b, xi) lies in Z[xi],
///  4. d_n^A mu_n(b) P_0(a/b, xi) lies in Z[xi].
IntegralityReport integrality_audit(const PadeSystem& sys, long a, long b, long p, long e);

/// ln b + sum_{q | b} ln q / (q - 1) + A + (A - 1) ln 2.
double c_bound(long b, long A);

struct SlopePoint {
  long n = 0;
  double slope = 0;  ///< (1/n) ln max_s |P_s(x0, xi)|
};

struct SlopeReport {
  long A = 0, q = 0, e = 2;
  Rational x0;
  std::vector<SlopePoint> points;
  double cap = 0;  ///< (A - 1) ln 2
  double c = 0;    ///< c_bound(den(x0), A)
};

SlopeReport archimedean_slope(long A, long q, const Rational& x0, long e, const std::vector<long>& ns);

struct LinearFormValue {
  long n = 0, A = 0, q = 0, a = 0, b = 1, p = 2, e = 2;
  PAdicExt value;
  long valuation = 0;
  long working_precision = 0;
  Integer b_factor, mu_factor, dn_power;
};

/// b mu_n(b) d_n^A (P_0(x, xi) + sum_s P_s(x, xi) t_p(s, x)) with x = a/b.
/// Precision starts at start_precision and doubles until the valuation is
/// certified with `guard` spare digits; PrecisionExhausted past max_precision.
LinearFormValue linear_form(const PadeSystem& sys, long a, long b, long p, long e, long start_precision,
                            long guard = 4, long max_precision = max_precision_from_env());

struct SeriesLinearForm {
  PAdicExt value;
  long terms = 0;  ///< last k summed
  /// Every computed u_k satisfies |u_k|_p <= (k + n + 1) p^{floor(n/(p-1)) + 1} / |e|_p.
  bool coefficient_bound_holds = false;
  std::vector<long> coefficient_valuations;  ///< v_p(u_k) for k = -n .. terms (kInfiniteValuation for 0)
};

/// The same linear form from b mu_n(b) sum_k u_k x^{-k}, summed until the
/// coefficient bound puts the tail below p^target.
SeriesLinearForm linear_form_from_series(const PadeSystem& sys, long a, long b, long p, long e, long target);

enum class BoundVariant { proposition, theorem1 };

struct BoundReport {
  long a = 0, b = 1, p = 2, e = 2, A = 2;
  BoundVariant variant = BoundVariant::proposition;
  long ext_degree = 1;
  long field_degree = 1;
  double c = 0;
  double rho = 0;
  double tau_lower_bound = 0;
  /// Smallest integer not below tau_lower_bound.
  long dimension_at_least = 0;
  bool trusted = false;  ///< computed without a verified determinant certificate
};

/// Needs a verified certificate for A among `certificates` unless trust is set.
BoundReport dimension_bound(long a, long b, long p, long e, long A, BoundVariant variant,
                            const std::vector<DeterminantCertificate>& certificates, bool trust = false);

/// The formula alone, with no certificate bookkeeping.
BoundReport bound_formula(long a, long b, long p, long e, long A, BoundVariant variant);

struct ScanRow {
  long p = 0;
  double bound = 0;
};

struct ScanReport {
  long A = 0;
  long p_max = 0;
  std::optional<long> threshold;  ///< least odd prime with bound > A - 1
  std::vector<ScanRow> rows;
};

/// Evaluates the bound at x = 2/p, e = 2, b = p for every odd prime p <= p_max
/// (the bound_formula value with the divisor sum reduced to ln p / (p - 1)).
ScanReport theorem2_scan(long A, long p_max, bool keep_rows = true);

/// The x = 2/p, e = 2 bound as a function of a continuous ln p.
double theorem2_bound_at_log(long A, double log_p);

/// Root of theorem2_bound_at_log(A, t) = A - 1 by bisection, and the least prime beyond it.
struct BracketResult {
  double log_root = 0;
  long threshold = 0;
};
BracketResult theorem2_bracket(long A);

}  // namespace padelin
