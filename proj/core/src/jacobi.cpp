#include "fdspec/jacobi.hpp"

#include <cmath>
#include <stdexcept>

#include "fdspec/special_functions.hpp"

namespace fdspec {

namespace jacobi {

namespace {

// Degree m+1 from degrees m and m-1 (m >= 1), classical recurrence in
// y = 2x - 1. Denominator is positive whenever a + b > -2.
inline double next(unsigned m, double a, double b, double y, double pm, double pm1) {
  const double n1 = m + 1.0;
  const double s = 2.0 * m + a + b;
  const double c1 = 2.0 * n1 * (n1 + a + b) * s;
  const double c2 = (s + 1.0) * (a * a - b * b);
  const double c3 = s * (s + 1.0) * (s + 2.0);
  const double c4 = 2.0 * (m + a) * (m + b) * (s + 2.0);
  return ((c2 + c3 * y) * pm - c4 * pm1) / c1;
}

inline double degree_one(JacobiParams p, double y) {
  return 0.5 * ((p.a + p.b + 2.0) * y + (p.a - p.b));
}

}  // namespace

double eval(unsigned n, JacobiParams p, double x) {
  const double y = 2.0 * x - 1.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = degree_one(p, y);
  for (unsigned m = 1; m < n; ++m) {
    const double nxt = next(m, p.a, p.b, y, cur, prev);
    prev = cur;
    cur = nxt;
  }
  return cur;
}

void eval_all(JacobiParams p, double x, std::span<double> out) {
  if (out.empty()) return;
  const double y = 2.0 * x - 1.0;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = degree_one(p, y);
  for (std::size_t m = 1; m + 1 < out.size(); ++m)
    out[m + 1] = next(static_cast<unsigned>(m), p.a, p.b, y, out[m], out[m - 1]);
}

double eval_series(JacobiParams p, std::span<const double> coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  const double y = 2.0 * x - 1.0;
  double acc = coeffs[0];
  if (coeffs.size() == 1) return acc;
  double prev = 1.0;
  double cur = degree_one(p, y);
  acc += coeffs[1] * cur;
  for (std::size_t m = 1; m + 1 < coeffs.size(); ++m) {
    const double nxt = next(static_cast<unsigned>(m), p.a, p.b, y, cur, prev);
    prev = cur;
    cur = nxt;
    acc += coeffs[m + 1] * cur;
  }
  return acc;
}

double eval_derivative(unsigned n, unsigned k, JacobiParams p, double x) {
  if (k > n) return 0.0;
  if (k == 0) return eval(n, p, x);
  const double factor = gamma_ratio(n + p.a + p.b + 1.0, static_cast<double>(k));
  return factor * eval(n - k, {p.a + k, p.b + k}, x);
}

double norm_sq(unsigned n, JacobiParams p) {
  if (!(p.a > -1.0) || !(p.b > -1.0))
    throw std::domain_error("jacobi::norm_sq: weight exponents must exceed -1");
  // Gamma(n+a+b+1) rewritten through Gamma(n+a+b+2) so that every log-gamma
  // argument stays positive even when a + b + 1 < 0 at n = 0.
  const double s = n + p.a + p.b + 1.0;
  const double ln = log_gamma(n + p.a + 1.0) + log_gamma(n + p.b + 1.0) -
                    log_gamma(n + 1.0) - log_gamma(n + p.a + p.b + 2.0);
  return s / (2.0 * n + p.a + p.b + 1.0) * std::exp(ln);
}

}  // namespace jacobi

double eval(const BasisExpansion& expansion, double x) {
  double value = jacobi::eval_series(expansion.params, expansion.coeffs, x);
  if (expansion.weight)
    value *= std::pow(1.0 - x, expansion.weight->a) * std::pow(x, expansion.weight->b);
  return value;
}

BasisExpansion weighted_derivative(const BasisExpansion& expansion) {
  if (!expansion.weight || !(*expansion.weight == expansion.params))
    throw std::invalid_argument(
        "weighted_derivative: expansion must carry a weight factor matching its basis");
  BasisExpansion d;
  d.params = {expansion.params.a - 1.0, expansion.params.b - 1.0};
  d.weight = d.params;
  d.coeffs.assign(expansion.coeffs.size() + 1, 0.0);
  for (std::size_t i = 0; i < expansion.coeffs.size(); ++i)
    d.coeffs[i + 1] = -(static_cast<double>(i) + 1.0) * expansion.coeffs[i];
  return d;
}

}  // namespace fdspec
