#pragma once

#include <cstddef>

namespace sdrabc {

// Scalar special functions used by the oracle densities and the diagnostics.
// All are accurate to ~1e-12 relative or better on their stated domains and
// are checked against frozen high-precision reference values in the tests.

/// log Gamma(x) for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

/// Digamma psi(x) for x > 0 (recurrence to x >= 8, then asymptotic series).
double digamma(double x);

/// Trigamma psi'(x) for x > 0.
double trigamma(double x);

double normal_pdf(double x);
double normal_cdf(double x);

/// Inverse standard normal CDF, p in (0,1). Acklam rational approximation
/// with one Halley polish step; |error| < 1e-9.
double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

double chi_squared_cdf(double x, std::size_t dof);

/// Chi-square quantile by Wilson-Hilferty start plus Newton polish to 1e-8.
double chi_squared_quantile(double p, std::size_t dof);

}  // namespace sdrabc
