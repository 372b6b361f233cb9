#include "fdspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fdspec/special_functions.hpp"

namespace fdspec {

namespace {

// Implicit-QL sweep for a symmetric tridiagonal matrix. Eigenvalues land in
// d (unsorted); z is rotated along, so starting from the first unit vector it
// ends holding the first component of each normalized eigenvector — all that
// Golub-Welsch needs. O(n^2), unlike a full eigenvector accumulation.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = 0;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw std::runtime_error("gauss_jacobi_rule: eigenvalue iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int order, JacobiParams params) {
  if (order < 1) throw std::invalid_argument("gauss_jacobi_rule: order must be at least 1");
  if (!(params.a > -1.0) || !(params.b > -1.0))
    throw std::domain_error("gauss_jacobi_rule: weight exponents must exceed -1");
  const double a = params.a;
  const double b = params.b;
  const int n = order;

  // recurrence coefficients of the monic Jacobi polynomials on (-1,1)
  std::vector<double> diag(n);
  std::vector<double> offdiag(n > 1 ? n - 1 : 0);
  diag[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
    if (k == 1) {
      offdiag[0] = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) /
                             ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0)));
    } else {
      offdiag[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) /
                                 (s * s * (s + 1.0) * (s - 1.0)));
    }
  }

  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiagonal_ql(diag, offdiag, z);

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int l, int r) { return diag[l] < diag[r]; });

  const double mass = beta_fn(a + 1.0, b + 1.0);
  QuadratureRule rule;
  rule.params = params;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (diag[idx[i]] + 1.0);
    rule.weights[i] = mass * z[idx[i]] * z[idx[i]];
  }

  for (int i = 0; i < n; ++i) {
    if (!(rule.nodes[i] > 0.0 && rule.nodes[i] < 1.0) || !(rule.weights[i] > 0.0) ||
        (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])))
      throw std::runtime_error("gauss_jacobi_rule: eigen solve produced an invalid rule");
  }
  return rule;
}

}  // namespace fdspec
