#pragma once

#include <optional>
#include <span>
#include <vector>

namespace fdspec {

/// Exponent pair identifying a Jacobi weight on (0,1):
/// weight(x) = (1 - x)^a * x^b.
/// Both exponents must exceed -1 wherever the pair is used as an integration
/// weight; as pure polynomial parameters there is no constraint (the
/// recurrence below additionally assumes a + b > -2, which every use here
/// satisfies).
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;
};

inline bool operator==(JacobiParams lhs, JacobiParams rhs) {
  return lhs.a == rhs.a && lhs.b == rhs.b;
}

namespace jacobi {

/// Value of the degree-n shifted Jacobi polynomial at x, by the three-term
/// recurrence in y = 2x - 1.
double eval(unsigned n, JacobiParams p, double x);

/// Degrees 0..out.size()-1 at x in one recurrence pass.
void eval_all(JacobiParams p, double x, std::span<double> out);

/// sum_i coeffs[i] * eval(i, p, x), single pass, no allocation.
double eval_series(JacobiParams p, std::span<const double> coeffs, double x);

/// k-th derivative via the parameter-raising identity
/// D^k G_n^(a,b) = [Gamma(n+k+a+b+1)/Gamma(n+a+b+1)] G_{n-k}^(a+k,b+k).
/// Returns 0 for k > n.
double eval_derivative(unsigned n, unsigned k, JacobiParams p, double x);

/// Squared weighted-L2 norm of the degree-n polynomial under its own weight:
///   1/(2n+a+b+1) * Gamma(n+a+1)Gamma(n+b+1) / (Gamma(n+1)Gamma(n+a+b+1)),
/// evaluated in log space. Requires a, b > -1.
double norm_sq(unsigned n, JacobiParams p);

}  // namespace jacobi

/// Finite expansion sum_i coeffs[i] * G_i^(params), optionally multiplied by
/// the weight factor (1-x)^weight->a * x^weight->b.
struct BasisExpansion {
  JacobiParams params;
  std::vector<double> coeffs;
  std::optional<JacobiParams> weight;
};

/// Pointwise value. Negative weight exponents make the value singular at the
/// endpoints; evaluate on the open interval in that case.
double eval(const BasisExpansion& expansion, double x);

/// Exact derivative of a weight-matched expansion:
///   D[(1-x)^p x^q sum_i d_i G_i^(p,q)] = (1-x)^(p-1) x^(q-1) sum_j e_j G_j^(p-1,q-1)
/// with e_0 = 0 and e_{i+1} = -(i+1) d_i. Requires weight == params.
BasisExpansion weighted_derivative(const BasisExpansion& expansion);

}  // namespace fdspec
