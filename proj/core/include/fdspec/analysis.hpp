#pragma once

#include <cmath>
#include <span>
#include <string>

#include "fdspec/quadrature.hpp"

namespace fdspec {

/// Highest admissible weighted Sobolev index (exclusive supremum) plus a note
/// on which singular term binds.
struct RegularityResult {
  double t_max = 0.0;
  std::string limiting_term;
};

/// Predicted asymptotic convergence rates for the three reported error norms.
struct RatePrediction {
  double l2_weighted = 0.0;
  double linf = 0.0;
  double d_weighted = 0.0;
  bool k_condition = false;
};

/// Weighted L2 distance sqrt(integral weight * (g - h)^2) with g - h sampled
/// at the (interior) nodes of the given rule. Negative weight exponents are
/// fine as long as they exceed -1.
template <class F, class G>
double weighted_error_norm(const QuadratureRule& rule, F&& g, G&& h) {
  double acc = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double d = g(rule.nodes[q]) - h(rule.nodes[q]);
    if (!std::isfinite(d))
      throw std::runtime_error("weighted_error_norm: difference is not finite at a node");
    acc += rule.weights[q] * d * d;
  }
  return std::sqrt(acc);
}

template <class F, class G>
double weighted_error_norm(F&& g, G&& h, JacobiParams params, int order) {
  return weighted_error_norm(gauss_jacobi_rule(order, params), g, h);
}

/// Max |g - h| over samples Chebyshev-distributed points
/// x_j = (1 - cos(pi j/(samples-1)))/2, clustering at both endpoints.
template <class F, class G>
double linf_error(F&& g, G&& h, int samples) {
  if (samples < 2) throw std::invalid_argument("linf_error: need at least two samples");
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double x = 0.5 * (1.0 - std::cos(std::acos(-1.0) * j / (samples - 1)));
    worst = std::max(worst, std::fabs(g(x) - h(x)));
  }
  return worst;
}

/// Empirical rate kappa = log(e1/e2) / log(n2/n1) between two resolutions.
double convergence_rate(double e1, double e2, int n1, int n2);

/// Least-squares slope of log(err) against log(n); returns the decay rate
/// (positive for decreasing errors).
double fit_rate(std::span<const int> ns, std::span<const double> errors);

enum class Endpoint { left, right };

/// Sobolev index bound for a pure power under the given weight: x^mu (left)
/// is in H^t iff t < 2 mu + b + 1; (1-x)^mu (right) mirrors to 2 mu + a + 1.
RegularityResult monomial_regularity(double mu, JacobiParams weight, Endpoint side);

/// Regularity of the manufactured right-hand side against its test-basis
/// weight: t_max = 3 - alpha - max(alpha - beta, beta), recording which
/// endpoint singularity binds.
RegularityResult f_regularity(double alpha, double beta);

/// Square-integrability of D(1/K) = gamma x^(gamma-1) against the
/// (alpha-beta, beta) weight: holds iff 2(gamma - 1) + beta > -1.
bool k_condition(double gamma, double alpha, double beta);

/// Predicted rates: Linf and the weighted derivative norm decay like
/// (alpha-1) + t; the weighted L2 norm gains one order to alpha + t only when
/// the K condition holds.
RatePrediction predict_rates(double alpha, double beta, double t, bool k_condition_holds);

}  // namespace fdspec
