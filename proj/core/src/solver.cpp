#include "fdspec/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "fdspec/special_functions.hpp"

namespace fdspec {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw std::domain_error("alpha must lie in (1, 2)");
}

double resolve_beta(const ProblemSpec& problem) {
  if (problem.beta) {
    if (!(*problem.beta > problem.alpha - 1.0 && *problem.beta < 1.0))
      throw std::domain_error("beta must lie strictly inside (alpha - 1, 1)");
    return *problem.beta;
  }
  if (!problem.r) throw std::invalid_argument("problem must supply r or beta");
  return solve_beta(problem.alpha, *problem.r);
}

void validate_problem(const ProblemSpec& problem) {
  check_alpha(problem.alpha);
  if (problem.r && !(*problem.r >= 0.0 && *problem.r <= 1.0))
    throw std::domain_error("r must lie in [0, 1]");
  if (!problem.diffusivity.inv_k)
    throw std::invalid_argument("problem must supply 1/K");
  const double k_min = problem.diffusivity.k_min;
  const double k_max = problem.diffusivity.k_max;
  if (!(k_min > 0.0) || !(k_max >= k_min))
    throw std::domain_error("diffusivity bounds must satisfy 0 < k_min <= k_max");
  // spot-check the declared bounds on a coarse grid
  for (int j = 0; j <= 20; ++j) {
    const double x = j / 20.0;
    const double v = problem.diffusivity.inv_k(x);
    if (!std::isfinite(v) || !(v > 0.0))
      throw std::domain_error("1/K must be finite and positive on [0, 1]");
    const double k = 1.0 / v;
    if (k < k_min * (1.0 - 1e-9) || k > k_max * (1.0 + 1e-9))
      throw std::domain_error("diffusivity leaves its declared [k_min, k_max] bounds");
  }
}

}  // namespace

double splitting_residual(double alpha, double r, double beta) {
  return (1.0 - r) * sin_pi(beta) - r * sin_pi(alpha - beta);
}

double solve_beta(double alpha, double r) {
  check_alpha(alpha);
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("solve_beta: r must lie in [0, 1]");
  if (r == 0.0) return 1.0;
  if (r == 1.0) return alpha - 1.0;
  double lo = alpha - 1.0;  // residual >= 0 here
  double hi = 1.0;          // residual <= 0 here
  while (hi - lo >= 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (splitting_residual(alpha, r, mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double r_from_beta(double alpha, double beta) {
  check_alpha(alpha);
  if (!(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("r_from_beta: beta must lie inside (alpha - 1, 1)");
  const double sb = sin_pi(beta);
  return sb / (sb + sin_pi(alpha - beta));
}

double eigenvalue(int i, double alpha, double beta) {
  if (i < 0) throw std::invalid_argument("eigenvalue: mode index must be nonnegative");
  const double front = -sin_pi(alpha) / (sin_pi(alpha - beta) + sin_pi(beta));
  return front * gamma_ratio(i + 1.0, alpha);
}

std::vector<double> rhs_coeffs(const ProblemSpec& problem, double beta, int degree, int order) {
  if (degree < 0) throw std::invalid_argument("rhs_coeffs: degree must be nonnegative");
  const JacobiParams basis{beta, problem.alpha - beta};
  std::vector<double> f(static_cast<std::size_t>(degree) + 1, 0.0);
  std::vector<double> gvals(f.size());
  for (const auto& term : problem.rhs) {
    const JacobiParams combined{basis.a + term.exp_at_one, basis.b + term.exp_at_zero};
    if (!(combined.a > -1.0) || !(combined.b > -1.0))
      throw std::domain_error(
          "rhs_coeffs: a singular term is not integrable against the basis weight");
    const QuadratureRule rule = gauss_jacobi_rule(order, combined);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = rule.nodes[q];
      double wq = rule.weights[q] * term.coeff;
      if (term.smooth) wq *= term.smooth(x);
      if (!std::isfinite(wq))
        throw std::runtime_error("rhs_coeffs: integrand is not finite at a quadrature node");
      jacobi::eval_all(basis, x, gvals);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += wq * gvals[i];
    }
  }
  return f;
}

SpectralSolution assemble(const ProblemSpec& problem, int degree, int order) {
  validate_problem(problem);
  if (degree < 0) throw std::invalid_argument("assemble: degree must be nonnegative");
  if (order < degree + 1) throw std::invalid_argument("assemble: order must be at least degree + 1");

  SpectralSolution sol;
  sol.alpha = problem.alpha;
  sol.beta = resolve_beta(problem);
  sol.r = problem.r ? *problem.r : r_from_beta(problem.alpha, sol.beta);
  sol.degree = degree;
  sol.rhs_coeffs = rhs_coeffs(problem, sol.beta, degree, order);

  const JacobiParams test_basis{sol.beta, sol.alpha - sol.beta};
  sol.eigenvalues.resize(sol.rhs_coeffs.size());
  sol.coeffs.resize(sol.rhs_coeffs.size());
  for (std::size_t i = 0; i < sol.coeffs.size(); ++i) {
    sol.eigenvalues[i] = eigenvalue(static_cast<int>(i), sol.alpha, sol.beta);
    if (!(sol.eigenvalues[i] > 0.0))
      throw std::runtime_error("assemble: nonpositive diagonalization constant");
    sol.coeffs[i] = sol.rhs_coeffs[i] /
                    (sol.eigenvalues[i] * jacobi::norm_sq(static_cast<unsigned>(i), test_basis));
  }

  sol.kernel_mass = kernel_mass(problem, sol.beta, order);
  if (!(sol.kernel_mass > 0.0)) throw std::runtime_error("assemble: kernel integral must be positive");
  sol.flux_mismatch = flux_mismatch(sol, problem, order);
  sol.kernel_coefficient = sol.flux_mismatch / sol.kernel_mass;
  return sol;
}

double eval_w(const SpectralSolution& sol, double x) {
  const JacobiParams p{sol.alpha - sol.beta, sol.beta};
  return std::pow(1.0 - x, p.a) * std::pow(x, p.b) * jacobi::eval_series(p, sol.coeffs, x);
}

namespace {

std::vector<double> flux_expansion(const SpectralSolution& sol) {
  // sum c_i (i+1) G_{i+1} at the lowered parameters; equals -Dw_N / weight
  std::vector<double> s(sol.coeffs.size() + 1, 0.0);
  for (std::size_t i = 0; i < sol.coeffs.size(); ++i)
    s[i + 1] = (static_cast<double>(i) + 1.0) * sol.coeffs[i];
  return s;
}

}  // namespace

double eval_dw(const SpectralSolution& sol, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("eval_dw: x must lie inside (0, 1)");
  const JacobiParams p{sol.alpha - sol.beta - 1.0, sol.beta - 1.0};
  const std::vector<double> s = flux_expansion(sol);
  return -std::pow(1.0 - x, p.a) * std::pow(x, p.b) * jacobi::eval_series(p, s, x);
}

double kernel_mass(const ProblemSpec& problem, double beta, int order) {
  const double alpha = problem.alpha;
  if (!(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("kernel_mass: beta must lie strictly inside (alpha - 1, 1)");
  const PartialWeightedIntegral kernel({alpha - beta - 1.0, beta - 1.0}, order);
  return kernel.full(problem.diffusivity.inv_k);
}

double flux_mismatch(const SpectralSolution& sol, const ProblemSpec& problem, int order) {
  const JacobiParams p{sol.alpha - sol.beta - 1.0, sol.beta - 1.0};
  const std::vector<double> s = flux_expansion(sol);
  const QuadratureRule rule = gauss_jacobi_rule(order, p);
  const auto& inv_k = problem.diffusivity.inv_k;
  return integrate(rule, [&](double x) { return jacobi::eval_series(p, s, x) * inv_k(x); });
}

SolutionEvaluator::SolutionEvaluator(const SpectralSolution& sol, const ProblemSpec& problem,
                                     int order)
    : SolutionEvaluator(sol, problem,
                        PartialWeightedIntegral(
                            {sol.alpha - sol.beta - 1.0, sol.beta - 1.0}, order)) {}

SolutionEvaluator::SolutionEvaluator(const SpectralSolution& sol, const ProblemSpec& problem,
                                     const PartialWeightedIntegral& kernel_integral)
    : alpha_(sol.alpha),
      beta_(sol.beta),
      inv_k_(problem.diffusivity.inv_k),
      coeffs_(sol.coeffs),
      flux_coeffs_(flux_expansion(sol)),
      kernel_(kernel_integral) {
  const JacobiParams expected{alpha_ - beta_ - 1.0, beta_ - 1.0};
  if (!(kernel_.exponents() == expected))
    throw std::invalid_argument("SolutionEvaluator: kernel integral exponents do not match");
  kernel_mass_ = kernel_.full(inv_k_);
  flux_mismatch_ = kernel_.full([&](double s) { return series(s) * inv_k_(s); });
  kernel_coeff_ = flux_mismatch_ / kernel_mass_;
}

double SolutionEvaluator::series(double s) const {
  return jacobi::eval_series({alpha_ - beta_ - 1.0, beta_ - 1.0}, flux_coeffs_, s);
}

double SolutionEvaluator::u(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("SolutionEvaluator::u: x must lie in [0, 1]");
  if (x <= 0.0) return 0.0;
  const auto flux = [&](double s) { return series(s) * inv_k_(s); };
  if (x <= 0.5) return kernel_coeff_ * kernel_.lower(x, inv_k_) - kernel_.lower(x, flux);
  // with the cached full integrals, u(1) = C_{1,N} den - c_{1,N} = 0 exactly
  return kernel_coeff_ * (kernel_mass_ - kernel_.tail(x, inv_k_)) -
         (flux_mismatch_ - kernel_.tail(x, flux));
}

double SolutionEvaluator::du(double x) const {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("SolutionEvaluator::du: x must lie inside (0, 1)");
  const double weight = std::pow(1.0 - x, alpha_ - beta_ - 1.0) * std::pow(x, beta_ - 1.0);
  return inv_k_(x) * weight * (kernel_coeff_ - series(x));
}

double SolutionEvaluator::w(double x) const {
  const JacobiParams p{alpha_ - beta_, beta_};
  return std::pow(1.0 - x, p.a) * std::pow(x, p.b) * jacobi::eval_series(p, coeffs_, x);
}

double SolutionEvaluator::dw(double x) const {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("SolutionEvaluator::dw: x must lie inside (0, 1)");
  const double weight = std::pow(1.0 - x, alpha_ - beta_ - 1.0) * std::pow(x, beta_ - 1.0);
  return -weight * series(x);
}

double eval_u(const SpectralSolution& sol, const ProblemSpec& problem, double x, int order) {
  return SolutionEvaluator(sol, problem, order).u(x);
}

}  // namespace fdspec
