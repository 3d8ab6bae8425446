#pragma once

#include <vector>

#include "padelin/cyclo.hpp"
#include "padelin/padic.hpp"
#include "padelin/padic_ext.hpp"

namespace padelin {

/// omega(x) = p^v(x) * omega(unit), the unit part being the root of unity of
/// order dividing p - 1 (or +-1 for p = 2) congruent to the unit modulo q_p.
/// The root of unity is known to N + guard significant digits.
PAdic teichmuller(const PAdic& x, const PrecisionContext& ctx);

/// <x> = x / omega(x), a 1-unit with the relative precision of x.
PAdic angle(const PAdic& x);

/// <x>^t.
PAdic angle_power(const PAdic& x, long t);

/// p-adic logarithm of a 1-unit, to absolute precision min(N, precision of u).
PAdic log_p(const PAdic& u, const PrecisionContext& ctx);

/// Number of Bernoulli terms kept when summing a series whose j-th term has
/// valuation at least j w - 1 - floor(log_p j): the largest J for which this
/// bound is still below the target precision.
long bernoulli_series_terms(long p, long w, long target);

/// Laurent expansion of the p-adic Hurwitz zeta function at an integer s >= 2, |x|_p > 1.
PAdic zeta_p(long s, const PAdic& x, const PrecisionContext& ctx);

/// The same expansion at s = 1 - m, where it is a finite sum. Needs only x != 0.
PAdic zeta_p_negative(long m, const PAdic& x);

/// Regularised value at s = 1: -log_p<x> + sum_j (-1)^j B_j x^{-j} / j.
PAdic zeta_p_one(const PAdic& x, const PrecisionContext& ctx);

/// sum_{j<e} xi^{-j} zeta_p(s, (x + j)/e), with the sign twist (-1)^{(s-1)j}
/// when p = 2 and |x|_2 = 2; s = 1 uses the regularised values.
PAdicExt ttilde_p(long s, const PAdic& x, const PAdicExt::Field& field, const PrecisionContext& ctx);

/// sum_{j<e} xi^{-j} e^{-s} y_j^{1-s} <y_j>^{s-1} zeta_p(s, y_j), y_j = (x + j)/e;
/// at s = 1, (1/e) sum_j xi^{-j} of the regularised values.
PAdicExt t_p(long s, const PAdic& x, const PAdicExt::Field& field, const PrecisionContext& ctx);

/// The same quantity from its expansion in powers of (x + l)^{-1} and log_p(1 + l/x).
PAdicExt t_p_series(long s, const PAdic& x, const PAdicExt::Field& field, const PrecisionContext& ctx);

/// Coefficient of x^{-k} in the formal Laurent expansion of t_p(s, x) in Q(xi_e)((1/x)).
CycloElement theta_coeff(long k, long s, long e);

/// theta_coeff(k, s, e) for k = 0 .. last.
std::vector<CycloElement> theta_coefficients(long s, long e, long last);

}  // namespace padelin
