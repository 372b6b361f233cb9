#pragma once

#include <functional>

// Independent reference computations for the test suite. Nothing here shares
// code with the library paths under test: integration is double-exponential
// (not Gauss), Jacobi values come from the explicit binomial sum (not the
// recurrence), and hypergeometric references come from the Euler integral or
// a long double series.
namespace oracles {

// integral_0^1 (1-x)^p x^q g(x, 1-x) dx by tanh-sinh quadrature; handles
// integrable endpoint singularities (p, q > -1). The integrand receives both
// x and 1-x, each computed without cancellation.
double weighted_integral(double p, double q, const std::function<double(double, double)>& g);

// integral_0^1 g(x) dx, smooth or weakly singular integrands.
double integral(const std::function<double(double)>& g);

// Shifted Jacobi polynomial by the explicit binomial-sum definition (small n).
double shifted_jacobi_sum(int n, double a, double b, double x);

// log Gamma via the C library (independent of the Lanczos path under test).
double log_gamma_ref(double x);

// Beta function from lgamma.
double beta_ref(double p, double q);

// 2F1 by the Euler integral (requires c > b > 0, x in [0,1]; x = 1 requires
// c - a - b > 0).
double hyp2f1_euler(double a, double b, double c, double x);

// 2F1 by direct long double summation (x bounded away from 1).
double hyp2f1_series_ld(double a, double b, double c, double x);

// central finite difference (f(x+h) - f(x-h)) / 2h
double central_diff(const std::function<double(double)>& f, double x, double h = 1e-6);

}  // namespace oracles
