#pragma once

#include <cstddef>

namespace fdspec {

/// Natural log of the Gamma function, x > 0. Lanczos approximation (g = 7,
/// nine coefficients) with the reflection formula below x = 0.5.
double log_gamma(double x);

/// sin(pi * x) with exact argument reduction: integer x maps to exactly 0.
double sin_pi(double x);

/// Gamma(n + mu) / Gamma(n) without forming the Gamma values themselves.
/// Requires n > 0 and n + mu > 0. Small arguments are shifted upward by the
/// recurrence and the remaining ratio is evaluated from a Stirling-series
/// difference, so the result keeps ~1e-14 relative accuracy up to n ~ 1e6
/// where a naive exp(log_gamma difference) loses five digits and the direct
/// ratio overflows.
double gamma_ratio(double n, double mu);

/// Euler Beta function B(p, q) = Gamma(p)Gamma(q)/Gamma(p+q), p, q > 0.
double beta_fn(double p, double q);

struct Hyp2f1Options {
  std::size_t max_terms = 1'000'000;
  double tolerance = 1e-16;    // stop when |term| <= tolerance * |partial sum|
  double unity_switch = 0.99;  // above this, expand around x = 1 instead
};

/// Gauss hypergeometric function 2F1(a, b; c; x) for x in [0, 1].
///
/// Ascending series on [0, unity_switch); for larger x the series converges
/// too slowly (terms ~ k^{-1-(c-a-b)} x^k), so the standard linear
/// transformation to argument 1 - x is used when c - a - b is not an integer.
/// x = 1 requires c - a - b > 0 and evaluates the Gauss summation closed form.
/// Throws std::domain_error on invalid parameters and std::runtime_error if
/// the series does not meet the stopping rule within max_terms.
double hyp2f1(double a, double b, double c, double x, const Hyp2f1Options& opts = {});

}  // namespace fdspec
