#pragma once

#include <functional>
#include <vector>

#include "fdspec/problem.hpp"
#include "fdspec/quadrature.hpp"

namespace fdspec {

/// Residual of the splitting relation, (1-r) sin(pi beta) - r sin(pi(alpha-beta)).
double splitting_residual(double alpha, double r, double beta);

/// Unique root beta in [alpha-1, 1] of the splitting relation, by bisection
/// to interval width < 1e-14. The endpoint weights r = 0 / r = 1 return the
/// endpoint roots 1 / alpha-1 directly.
double solve_beta(double alpha, double r);

/// Inverse of solve_beta: the r for which beta solves the relation exactly,
///   r = sin(pi beta) / (sin(pi beta) + sin(pi(alpha - beta))).
double r_from_beta(double alpha, double beta);

/// Diagonalization constant of mode i,
///   -sin(pi alpha)/(sin(pi(alpha-beta)) + sin(pi beta)) * Gamma(i+1+alpha)/Gamma(i+1);
/// positive for alpha in (1,2) and growing like (i+1)^alpha.
double eigenvalue(int i, double alpha, double beta);

/// Coefficients of the right-hand side against the test basis, degrees
/// 0..degree: each singular term's endpoint monomials are absorbed into the
/// quadrature weight exponents (beta + exp_at_one, alpha - beta + exp_at_zero)
/// and only the smooth factor and the polynomial are sampled. Throws if a
/// combined exponent is not integrable (<= -1).
std::vector<double> rhs_coeffs(const ProblemSpec& problem, double beta, int degree, int order);

/// Everything needed to evaluate the spectral solution of the transformed
/// problem and its postprocessing constants. Immutable after assemble().
struct SpectralSolution {
  double alpha = 0.0;
  double r = 0.0;     // resolved weight (given or derived from beta)
  double beta = 0.0;  // resolved splitting exponent
  int degree = 0;     // highest retained mode N
  std::vector<double> rhs_coeffs;    // f_i
  std::vector<double> eigenvalues;   // lambda_i
  std::vector<double> coeffs;        // c_i = f_i / (lambda_i * norm_sq_i)
  double kernel_mass = 0.0;          // integral (1-s)^(alpha-beta-1) s^(beta-1) / K
  double flux_mismatch = 0.0;        // c_{1,N} = -integral Dw_N / K
  double kernel_coefficient = 0.0;   // C_{1,N} = c_{1,N} / kernel_mass
};

/// Diagonal solve at the given quadrature order (order >= degree + 1):
/// resolves beta (given beta primary, else from r), fills the coefficient
/// vectors and caches the postprocessing constants at the same order.
SpectralSolution assemble(const ProblemSpec& problem, int degree, int order);

/// w_N(x) = (1-x)^(alpha-beta) x^beta * sum c_i G_i; exactly 0 at both ends.
double eval_w(const SpectralSolution& sol, double x);

/// Dw_N via the exact weighted-derivative expansion; singular at the
/// endpoints, so x must lie inside (0,1).
double eval_dw(const SpectralSolution& sol, double x);

/// den at a given order.
double kernel_mass(const ProblemSpec& problem, double beta, int order);

/// c_{1,N} at a given order, using the exact expansion of Dw_N: the singular
/// weight is absorbed by the rule, the polynomial times 1/K is sampled.
double flux_mismatch(const SpectralSolution& sol, const ProblemSpec& problem, int order);

/// Evaluates u_N(x) by the reconstruction
///   u_N = C_{1,N} * integral_0^x kernel/K + integral_0^x Dw_N/K
/// with every integral (including the constants den and c_{1,N} inside
/// C_{1,N}) discretized by the same partial-integral scheme at one fixed
/// order, so u_N(0) = 0 exactly and u_N(1) = 0 to rounding by construction.
/// Reentrant; safe to share across threads once built.
class SolutionEvaluator {
 public:
  SolutionEvaluator(const SpectralSolution& sol, const ProblemSpec& problem, int order);
  SolutionEvaluator(const SpectralSolution& sol, const ProblemSpec& problem,
                    const PartialWeightedIntegral& kernel_integral);

  double u(double x) const;
  double du(double x) const;  // x in (0,1)
  double w(double x) const;
  double dw(double x) const;  // x in (0,1)

  double kernel_mass() const { return kernel_mass_; }
  double flux_mismatch() const { return flux_mismatch_; }
  double kernel_coefficient() const { return kernel_coeff_; }

 private:
  double series(double s) const;  // sum c_i (i+1) G_{i+1} at the lowered parameters

  double alpha_;
  double beta_;
  std::function<double(double)> inv_k_;
  std::vector<double> coeffs_;        // c_i
  std::vector<double> flux_coeffs_;   // (i+1) c_i shifted up one degree
  PartialWeightedIntegral kernel_;    // exponents (alpha-beta-1, beta-1)
  double kernel_mass_;
  double flux_mismatch_;
  double kernel_coeff_;
};

/// One-shot wrapper over SolutionEvaluator.
double eval_u(const SpectralSolution& sol, const ProblemSpec& problem, double x, int order);

}  // namespace fdspec
