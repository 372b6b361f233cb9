#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fdspec/quadrature.hpp"

namespace fdspec {

/// One additive term of the right-hand side:
///   coeff * (1-x)^exp_at_one * x^exp_at_zero * smooth(x)
/// with smooth defaulting to 1. The singular monomial factors are declared
/// explicitly so they can be moved into quadrature weights; a quadrature is
/// admissible only while the combined exponents stay above -1 (checked at the
/// site that adds the basis weight).
struct SingularTerm {
  double coeff = 1.0;
  double exp_at_one = 0.0;   // exponent of (1 - x)
  double exp_at_zero = 0.0;  // exponent of x
  std::function<double(double)> smooth;  // empty means identically 1
};

/// Diffusivity K given through 1/K (every formula in the pipeline divides by
/// K) plus optional derivative of 1/K and positive bounds K in [k_min, k_max].
struct Diffusivity {
  std::function<double(double)> inv_k;
  std::function<double(double)> d_inv_k;  // optional
  double k_min = 0.0;
  double k_max = 0.0;
};

/// The two-sided fractional diffusion boundary-value problem. Exactly one of
/// r / beta is normally supplied; when both are present beta is primary and
/// the pair is only checked for consistency by the callers that care.
struct ProblemSpec {
  double alpha = 0.0;               // fractional order, in (1,2)
  std::optional<double> r;          // forward/backward weight, in [0,1]
  std::optional<double> beta;       // splitting exponent, in (alpha-1, 1)
  Diffusivity diffusivity;
  std::vector<SingularTerm> rhs;
};

/// Pointwise right-hand side value (singular at endpoints when the terms
/// carry negative exponents).
double eval_rhs(const ProblemSpec& problem, double x);

/// Benchmark family: K(x) = 1/(1 + x^gamma) and
///   f(x) = [-r x^(1-alpha) + (1-r)(1-x)^(1-alpha)] / Gamma(2-alpha).
/// r-primary variant (beta left unset).
ProblemSpec manufactured_problem(double alpha, double r, double gamma);

/// Same family with beta primary; r is derived from the sine splitting
/// relation so the pair is exactly consistent.
ProblemSpec manufactured_problem_beta(double alpha, double beta, double gamma);

/// Closed-form transformed solution of the manufactured family:
///   w(x) = x - C x^beta 2F1(1+beta-alpha, beta; beta+1; x),
///   C = 1 / 2F1(1+beta-alpha, beta; beta+1; 1).
double exact_w(double alpha, double beta, double x);

/// Derivative of exact_w in closed form,
///   Dw(x) = 1 - C beta x^(beta-1) (1-x)^(alpha-beta-1),  x in (0,1).
/// (Validated against finite differences of exact_w in the test suite.)
double exact_dw(double alpha, double beta, double x);

/// Reference solution of the untransformed problem for the manufactured
/// family, via the reconstruction
///   u(x) = C1 * k1K(x) + integral_0^x Dw/K,
/// with the constant and every integral discretized by the singularity-aware
/// partial-integral scheme at a fixed order. Deterministic and self-consistent:
/// u(1) = 0 to rounding at any order.
class ExactSolution {
 public:
  ExactSolution(double alpha, double beta, std::function<double(double)> inv_k, int order);

  double u(double x) const;
  double du(double x) const;  // x in (0,1)
  double w(double x) const { return exact_w(alpha_, beta_, x); }
  double dw(double x) const { return exact_dw(alpha_, beta_, x); }

  double kernel_mass() const { return kernel_mass_; }          // den
  double flux_mismatch() const { return flux_mismatch_; }      // c_1
  double kernel_coefficient() const { return kernel_coeff_; }  // C_1

 private:
  double alpha_;
  double beta_;
  std::function<double(double)> inv_k_;
  PartialWeightedIntegral kernel_;  // exponents (alpha-beta-1, beta-1)
  PartialWeightedIntegral plain_;   // exponents (0, 0)
  double kernel_mass_;   // integral of 1/K against the kernel weight
  double inv_k_total_;   // integral_0^1 1/K
  double flux_mismatch_;
  double kernel_coeff_;
};

/// One-shot convenience wrapper over ExactSolution.
double exact_u(const ProblemSpec& problem, double beta, double x, int order);

}  // namespace fdspec
