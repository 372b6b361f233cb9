#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fdspec/jacobi.hpp"

namespace fdspec {

/// Gauss-Jacobi rule for integrals of the form
///   integral_0^1 (1-x)^a x^b g(x) dx  =  sum_q weights[q] * g(nodes[q]).
/// Nodes are strictly increasing and strictly inside (0,1); weights are
/// positive and sum to B(a+1, b+1).
struct QuadratureRule {
  JacobiParams params;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Build the order-point rule via the Golub-Welsch eigenproblem of the
/// symmetric tridiagonal recurrence matrix on (-1,1), mapped affinely to
/// (0,1). Requires a, b > -1 and order >= 1.
QuadratureRule gauss_jacobi_rule(int order, JacobiParams params);

/// Weighted quadrature sum in fixed ascending-node order. Throws if g is not
/// finite at a node.
template <class F>
double integrate(const QuadratureRule& rule, F&& g) {
  double acc = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double v = g(rule.nodes[q]);
    if (!std::isfinite(v))
      throw std::runtime_error("integrate: integrand is not finite at a quadrature node");
    acc += rule.weights[q] * v;
  }
  return acc;
}

/// Coefficients of the weighted-L2 orthogonal projection of g onto degrees
/// 0..degree: coeff[i] = integral(weight * g * G_i) / norm_sq(i).
/// Requires order >= degree + 1.
template <class F>
std::vector<double> project_coeffs(F&& g, int degree, JacobiParams params, int order) {
  if (degree < 0) throw std::invalid_argument("project_coeffs: degree must be nonnegative");
  if (order < degree + 1)
    throw std::invalid_argument("project_coeffs: order must be at least degree + 1");
  const QuadratureRule rule = gauss_jacobi_rule(order, params);
  std::vector<double> acc(static_cast<std::size_t>(degree) + 1, 0.0);
  std::vector<double> basis(acc.size());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double v = g(rule.nodes[q]);
    if (!std::isfinite(v))
      throw std::runtime_error("project_coeffs: integrand is not finite at a quadrature node");
    jacobi::eval_all(params, rule.nodes[q], basis);
    const double wv = rule.weights[q] * v;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += wv * basis[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i)
    acc[i] /= jacobi::norm_sq(static_cast<unsigned>(i), params);
  return acc;
}

/// Partial integrals integral_0^x (1-s)^a s^b g(s) ds for every x in [0,1]
/// with both endpoint singularities absorbed into quadrature weights:
///
///   x <= 1/2:  s = x*tau, rule with weight tau^b, the (1 - x*tau)^a factor
///              is sampled (it is smooth there);
///   x >  1/2:  integral_0^1 minus the tail, where the tail substitutes
///              s = x + (1-x)*tau, rule with weight (1-tau)^a, and samples
///              the s^b factor.
///
/// No node ever approaches a singular endpoint of the integrand.
class PartialWeightedIntegral {
 public:
  PartialWeightedIntegral(JacobiParams exponents, int order)
      : exps_(exponents),
        whole_(gauss_jacobi_rule(order, exponents)),
        origin_(gauss_jacobi_rule(order, {0.0, exponents.b})),
        far_(gauss_jacobi_rule(order, {exponents.a, 0.0})) {}

  const JacobiParams& exponents() const { return exps_; }
  int order() const { return static_cast<int>(whole_.nodes.size()); }

  template <class F>
  double full(F&& g) const {
    return integrate(whole_, g);
  }

  /// integral_0^x for x in [0, 1/2].
  template <class F>
  double lower(double x, F&& g) const {
    if (x <= 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t q = 0; q < origin_.nodes.size(); ++q) {
      const double s = x * origin_.nodes[q];
      acc += origin_.weights[q] * std::pow(1.0 - s, exps_.a) * g(s);
    }
    return std::pow(x, exps_.b + 1.0) * acc;
  }

  /// integral_x^1 for x in [1/2, 1].
  template <class F>
  double tail(double x, F&& g) const {
    if (x >= 1.0) return 0.0;
    double acc = 0.0;
    for (std::size_t q = 0; q < far_.nodes.size(); ++q) {
      const double s = x + (1.0 - x) * far_.nodes[q];
      acc += far_.weights[q] * std::pow(s, exps_.b) * g(s);
    }
    return std::pow(1.0 - x, exps_.a + 1.0) * acc;
  }

  template <class F>
  double operator()(double x, F&& g) const {
    if (x <= 0.5) return lower(x, g);
    return full(g) - tail(x, g);
  }

 private:
  JacobiParams exps_;
  QuadratureRule whole_;
  QuadratureRule origin_;
  QuadratureRule far_;
};

}  // namespace fdspec
