#include "fdspec/problem.hpp"

#include <cmath>
#include <stdexcept>

#include "fdspec/solver.hpp"
#include "fdspec/special_functions.hpp"

namespace fdspec {

namespace {

void check_manufactured_params(double alpha, double gamma) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::domain_error("manufactured_problem: alpha must lie in (1, 2)");
  if (!(gamma > 0.0)) throw std::domain_error("manufactured_problem: gamma must be positive");
}

ProblemSpec manufactured_impl(double alpha, double r, double gamma) {
  ProblemSpec problem;
  problem.alpha = alpha;
  problem.diffusivity.inv_k = [gamma](double x) { return 1.0 + std::pow(x, gamma); };
  problem.diffusivity.d_inv_k = [gamma](double x) { return gamma * std::pow(x, gamma - 1.0); };
  problem.diffusivity.k_min = 0.5;  // K(1) = 1/2
  problem.diffusivity.k_max = 1.0;  // K(0) = 1
  const double scale = std::exp(log_gamma(2.0 - alpha));
  problem.rhs.push_back({-r / scale, 0.0, 1.0 - alpha, {}});
  problem.rhs.push_back({(1.0 - r) / scale, 1.0 - alpha, 0.0, {}});
  return problem;
}

void check_wb_params(double alpha, double beta) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::domain_error("exact_w: alpha must lie in (1, 2)");
  if (!(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("exact_w: beta must lie inside (alpha - 1, 1)");
}

}  // namespace

double eval_rhs(const ProblemSpec& problem, double x) {
  double acc = 0.0;
  for (const auto& term : problem.rhs) {
    double v = term.coeff * std::pow(1.0 - x, term.exp_at_one) * std::pow(x, term.exp_at_zero);
    if (term.smooth) v *= term.smooth(x);
    acc += v;
  }
  return acc;
}

ProblemSpec manufactured_problem(double alpha, double r, double gamma) {
  check_manufactured_params(alpha, gamma);
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("manufactured_problem: r must lie in [0, 1]");
  ProblemSpec problem = manufactured_impl(alpha, r, gamma);
  problem.r = r;
  return problem;
}

ProblemSpec manufactured_problem_beta(double alpha, double beta, double gamma) {
  check_manufactured_params(alpha, gamma);
  if (!(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("manufactured_problem_beta: beta must lie inside (alpha - 1, 1)");
  ProblemSpec problem = manufactured_impl(alpha, r_from_beta(alpha, beta), gamma);
  problem.beta = beta;
  return problem;
}

double exact_w(double alpha, double beta, double x) {
  check_wb_params(alpha, beta);
  if (x <= 0.0) return 0.0;
  const double a = 1.0 + beta - alpha;
  const double scale = 1.0 / hyp2f1(a, beta, beta + 1.0, 1.0);
  return x - scale * std::pow(x, beta) * hyp2f1(a, beta, beta + 1.0, x);
}

double exact_dw(double alpha, double beta, double x) {
  check_wb_params(alpha, beta);
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("exact_dw: x must lie inside (0, 1)");
  const double scale = beta / hyp2f1(1.0 + beta - alpha, beta, beta + 1.0, 1.0);
  return 1.0 - scale * std::pow(x, beta - 1.0) * std::pow(1.0 - x, alpha - beta - 1.0);
}

ExactSolution::ExactSolution(double alpha, double beta, std::function<double(double)> inv_k,
                             int order)
    : alpha_(alpha),
      beta_(beta),
      inv_k_(std::move(inv_k)),
      kernel_({alpha - beta - 1.0, beta - 1.0}, order),
      plain_({0.0, 0.0}, order) {
  check_wb_params(alpha, beta);
  if (!inv_k_) throw std::invalid_argument("ExactSolution: 1/K must be provided");
  kernel_mass_ = kernel_.full(inv_k_);
  inv_k_total_ = plain_.full(inv_k_);
  if (!(kernel_mass_ > 0.0))
    throw std::runtime_error("ExactSolution: kernel integral must be positive");
  // c_1 = -integral Dw/K with Dw = 1 - C beta (1-s)^(a-b-1) s^(b-1) and
  // C beta = 1/B(beta, alpha-beta), split into the plain and kernel pieces
  const double c_beta = beta / hyp2f1(1.0 + beta - alpha_, beta, beta + 1.0, 1.0);
  flux_mismatch_ = c_beta * kernel_mass_ - inv_k_total_;
  kernel_coeff_ = c_beta - inv_k_total_ / kernel_mass_;
}

double ExactSolution::u(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("ExactSolution::u: x must lie in [0, 1]");
  if (x <= 0.0) return 0.0;
  const double slope = -inv_k_total_ / kernel_mass_;  // C_1 - C beta
  if (x <= 0.5) return slope * kernel_.lower(x, inv_k_) + plain_.lower(x, inv_k_);
  // cached full integrals make u(1) vanish exactly
  return slope * (kernel_mass_ - kernel_.tail(x, inv_k_)) +
         (inv_k_total_ - plain_.tail(x, inv_k_));
}

double ExactSolution::du(double x) const {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("ExactSolution::du: x must lie inside (0, 1)");
  const double singular =
      std::pow(1.0 - x, alpha_ - beta_ - 1.0) * std::pow(x, beta_ - 1.0);
  return inv_k_(x) * (1.0 - inv_k_total_ / kernel_mass_ * singular);
}

double exact_u(const ProblemSpec& problem, double beta, double x, int order) {
  return ExactSolution(problem.alpha, beta, problem.diffusivity.inv_k, order).u(x);
}

}  // namespace fdspec
