#include "fdspec/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace fdspec {

double convergence_rate(double e1, double e2, int n1, int n2) {
  if (!(e1 > 0.0) || !(e2 > 0.0))
    throw std::domain_error("convergence_rate: errors must be positive");
  if (!(n2 > n1) || n1 < 1)
    throw std::invalid_argument("convergence_rate: need n2 > n1 >= 1");
  return std::log(e1 / e2) / std::log(static_cast<double>(n2) / n1);
}

double fit_rate(std::span<const int> ns, std::span<const double> errors) {
  if (ns.size() != errors.size() || ns.size() < 2)
    throw std::invalid_argument("fit_rate: need matching lists of at least two entries");
  const std::size_t m = ns.size();
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(errors[i] > 0.0)) throw std::domain_error("fit_rate: errors must be positive");
    mean_x += std::log(static_cast<double>(ns[i]));
    mean_y += std::log(errors[i]);
  }
  mean_x /= m;
  mean_y /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = std::log(static_cast<double>(ns[i])) - mean_x;
    sxy += dx * (std::log(errors[i]) - mean_y);
    sxx += dx * dx;
  }
  return -sxy / sxx;
}

RegularityResult monomial_regularity(double mu, JacobiParams weight, Endpoint side) {
  RegularityResult res;
  if (side == Endpoint::left) {
    res.t_max = 2.0 * mu + weight.b + 1.0;
    res.limiting_term = "x^mu at the left endpoint";
  } else {
    res.t_max = 2.0 * mu + weight.a + 1.0;
    res.limiting_term = "(1-x)^mu at the right endpoint";
  }
  return res;
}

RegularityResult f_regularity(double alpha, double beta) {
  if (!(alpha > 1.0 && alpha < 2.0) || !(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("f_regularity: parameters outside the admissible range");
  const JacobiParams weight{beta, alpha - beta};
  const RegularityResult left = monomial_regularity(1.0 - alpha, weight, Endpoint::left);
  const RegularityResult right = monomial_regularity(1.0 - alpha, weight, Endpoint::right);
  RegularityResult res;
  res.t_max = std::min(left.t_max, right.t_max);
  if (left.t_max < right.t_max)
    res.limiting_term = "x^(1-alpha) at the left endpoint";
  else if (right.t_max < left.t_max)
    res.limiting_term = "(1-x)^(1-alpha) at the right endpoint";
  else
    res.limiting_term = "both endpoint singularities equally";
  return res;
}

bool k_condition(double gamma, double alpha, double beta) {
  if (!(gamma > 0.0)) throw std::domain_error("k_condition: gamma must be positive");
  if (!(alpha > 1.0 && alpha < 2.0) || !(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("k_condition: parameters outside the admissible range");
  return 2.0 * (gamma - 1.0) + beta > -1.0;
}

RatePrediction predict_rates(double alpha, double beta, double t, bool k_condition_holds) {
  if (!(alpha > 1.0 && alpha < 2.0) || !(beta > alpha - 1.0 && beta < 1.0))
    throw std::domain_error("predict_rates: parameters outside the admissible range");
  if (!(t >= 0.0)) throw std::domain_error("predict_rates: t must be nonnegative");
  RatePrediction pred;
  pred.linf = (alpha - 1.0) + t;
  pred.d_weighted = (alpha - 1.0) + t;
  pred.l2_weighted = k_condition_holds ? alpha + t : (alpha - 1.0) + t;
  pred.k_condition = k_condition_holds;
  return pred;
}

}  // namespace fdspec
