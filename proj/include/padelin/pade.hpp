#pragma once

#include <vector>

#include "padelin/bipoly.hpp"
#include "padelin/cyclo.hpp"
#include "padelin/laurent.hpp"
#include "padelin/poly.hpp"
#include "padelin/rational.hpp"

namespace padelin {

using PolyQ = Poly<Rational>;
using BiPolyQ = BiPoly<Rational>;

/// Residues r[j][s] (j in [0, n], s in [1, A]; r[j][0] is unused and zero) of
///   R(k) = n!^{A-1} (k)_{n+1} / ((k + x)_n^A (k + x + n)^q)
/// at the poles k = -x - j, so that R(k) = sum_{s,j} r[j][s](x) / (k + x + j)^s.
using ResidueTable = std::vector<std::vector<PolyQ>>;

/// Throws std::invalid_argument unless A >= 2, 0 <= q <= A, n >= 1 and A n >= n + 3.
void check_pade_parameters(long n, long A, long q);

ResidueTable residue_coeffs(long n, long A, long q);

/// R(k) for rational k and x, evaluated directly.
Rational rational_function_value(long n, long A, long q, const Rational& x, const Rational& k);

/// The approximation system: P[s] = sum_j r[j][s] z^j for s >= 1 and the
/// polynomial part P[0], with every degree statement checked at construction.
struct PadeSystem {
  long n = 0;
  long A = 0;
  long q = 0;
  ResidueTable r;
  std::vector<BiPolyQ> P;
};

/// Builds the system; a failed cancellation or degree bound throws std::logic_error.
PadeSystem build_pade(long n, long A, long q);

/// Re-runs the degree checks on an existing system (std::logic_error on failure).
void check_pade_degrees(const PadeSystem& sys);

/// P(x0, z0) with z0 in Q(xi).
CycloElement evaluate(const BiPolyQ& P, const Rational& x0, const CycloElement& z0);

/// P(x, xi) as a polynomial in x over Q(xi_e).
Poly<CycloElement> at_root(const BiPolyQ& P, long e);

/// Coefficients u_k of d_n^A (P_0(x, xi) + sum_s P_s(x, xi) Theta(s, x)) in powers of 1/x.
struct RemainderSeries {
  long n = 0;
  long A = 0;
  long q = 0;
  long e = 0;
  /// Last computed index; coefficients run over k = -n .. truncation.
  long truncation = 0;
  bool normalized = true;  ///< d_n^A premultiplied
  std::vector<CycloElement> u;

  const CycloElement& at(long k) const { return u.at(static_cast<std::size_t>(k + n)); }
  /// A(n - 1) - 3: every u_k below it vanishes.
  long vanishing_bound() const { return A * (n - 1) - 3; }
  /// First k with u_k != 0, or truncation + 1 if none.
  long first_nonzero() const;
};

/// Throws std::invalid_argument if the truncation cannot reach the vanishing
/// range and std::logic_error if some u_k below the bound is nonzero.
RemainderSeries remainder_series(const PadeSystem& sys, long e, long truncation);

/// |S(x0, xi) - P_0(x0, xi) - sum_s P_s(x0, xi) phi_s(x0, xi^{-1})| in floating
/// point, S and phi_s summed over `terms` terms with periodic averaging.
long double numeric_identity_check(const PadeSystem& sys, long e, const Rational& x0, long terms,
                                   int float_precision_bits = 64);

/// |S(x0, xi)| summed directly.
long double remainder_magnitude(const PadeSystem& sys, long e, long double x0, long terms);

}  // namespace padelin
