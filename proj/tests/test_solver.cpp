#include <cmath>
#include <vector>

#include <doctest.h>

#include "fdspec/analysis.hpp"
#include "fdspec/problem.hpp"
#include "fdspec/solver.hpp"
#include "fdspec/special_functions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fdspec;

namespace {

ProblemSpec constant_k_problem(double alpha, double r, double k) {
  ProblemSpec pb = manufactured_problem(alpha, r, 0.8);
  pb.diffusivity.inv_k = [k](double) { return 1.0 / k; };
  pb.diffusivity.d_inv_k = [](double) { return 0.0; };
  pb.diffusivity.k_min = k;
  pb.diffusivity.k_max = k;
  return pb;
}

}  // namespace

TEST_CASE("splitting exponent from the sine relation") {
  CHECK(std::fabs(solve_beta(1.6, 0.5) - 0.8) < 1e-12);
  CHECK(solve_beta(1.7, 0.0) == 1.0);
  CHECK(solve_beta(1.7, 1.0) == doctest::Approx(0.7).epsilon(1e-15));
  // Experiments 2-3 quote the rounded pair (0.63, 0.50); the exact root is
  const double root = solve_beta(1.3, 0.63);
  CHECK(std::fabs(root - 0.4998097007468012) < 1e-12);
  CHECK(std::fabs(splitting_residual(1.3, 0.63, root)) < 1e-13);
  CHECK_THROWS_AS(solve_beta(1.6, 1.0001), std::domain_error);
  CHECK_THROWS_AS(solve_beta(0.9, 0.5), std::domain_error);
}

TEST_CASE("r_from_beta inverts solve_beta") {
  CHECK(std::fabs(r_from_beta(1.6, 0.8) - 0.5) < 1e-14);
  CHECK(std::fabs(r_from_beta(1.3, 0.5) - 0.62980809184124997) < 1e-13);
  testutil::Lcg rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const double alpha = rng.next(1.05, 1.95);
    const double beta = rng.next(alpha - 0.98, 0.98);
    if (!(beta > alpha - 1.0 && beta < 1.0)) continue;
    CHECK(std::fabs(solve_beta(alpha, r_from_beta(alpha, beta)) - beta) < 1e-12);
  }
}

TEST_CASE("diagonalization constants") {
  // frozen: sin(0.6 pi)/(2 sin(0.8 pi)) * Gamma(2.6)
  CHECK(testutil::rel_dev(eigenvalue(0, 1.6, 0.8), 1.1565905636937734) < 1e-13);
  for (int i = 1; i <= 100; ++i) {
    const double ratio = eigenvalue(i, 1.6, 0.8) / eigenvalue(i - 1, 1.6, 0.8);
    CHECK(std::fabs(ratio - (i + 1.6) / i) < 1e-13);
  }
  // the Gamma-ratio part approaches (i+1)^alpha; the sine prefactor stays
  const double front = -sin_pi(1.6) / (sin_pi(0.8) + sin_pi(0.8));
  CHECK(std::fabs(eigenvalue(10000, 1.6, 0.8) / (front * std::pow(10001.0, 1.6)) - 1.0) < 1e-2);
  for (int i : {0, 7, 500}) CHECK(eigenvalue(i, 1.3, 0.5) > 0.0);
  CHECK_THROWS_AS(eigenvalue(-1, 1.6, 0.8), std::invalid_argument);
}

TEST_CASE("rhs coefficients absorb singular factors into the weight") {
  const double alpha = 1.6, beta = 0.8;
  const JacobiParams basis{beta, alpha - beta};

  // a polynomial right-hand side reproduces itself
  ProblemSpec pb = manufactured_problem(alpha, 0.5, 0.8);
  pb.rhs.clear();
  pb.rhs.push_back({1.0, 0.0, 0.0, [&](double x) { return jacobi::eval(2, basis, x); }});
  const auto f = rhs_coeffs(pb, beta, 5, 64);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double expected = (i == 2) ? jacobi::norm_sq(2, basis) : 0.0;
    CHECK(std::fabs(f[i] - expected) < 1e-13);
  }

  pb.rhs.clear();
  pb.rhs.push_back({1.0, 0.0, 0.0, {}});
  const auto ones = rhs_coeffs(pb, beta, 4, 64);
  CHECK(testutil::rel_dev(ones[0], beta_fn(beta + 1.0, alpha - beta + 1.0)) < 1e-13);
  for (std::size_t i = 1; i < ones.size(); ++i) CHECK(std::fabs(ones[i]) < 1e-14);

  // combined exponent at -1 must be rejected
  pb.rhs.clear();
  pb.rhs.push_back({1.0, 0.0, -1.0 - (alpha - beta), {}});
  CHECK_THROWS_AS(rhs_coeffs(pb, beta, 3, 64), std::domain_error);
}

TEST_CASE("experiment rhs coefficients match the tanh-sinh oracle") {
  const double alpha = 1.6, beta = 0.8;
  const ProblemSpec pb = manufactured_problem(alpha, 0.5, 0.8);
  const auto f = rhs_coeffs(pb, beta, 36, 256);
  // frozen small-degree values (binomial-sum integrand in the oracle)
  CHECK(std::fabs(f[0]) < 1e-14);
  CHECK(std::fabs(f[1] - 0.069395433821626468) < 1e-12);
  CHECK(std::fabs(f[3] - 0.025596737083219655) < 1e-12);
  // full column against the oracle (recurrence inside the oracle integrand)
  const JacobiParams basis{beta, alpha - beta};
  for (int i : {0, 1, 2, 5, 12, 24, 36}) {
    double oracle = 0.0;
    for (const auto& term : pb.rhs) {
      oracle += term.coeff *
                oracles::weighted_integral(
                    beta + term.exp_at_one, alpha - beta + term.exp_at_zero,
                    [&](double x, double) { return jacobi::eval(i, basis, x); });
    }
    CHECK(std::fabs(f[i] - oracle) < 1e-10);
  }
}

TEST_CASE("assemble solves the diagonal system") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const SpectralSolution sol = assemble(pb, 36, 256);
  CHECK(sol.beta == 0.8);
  CHECK(testutil::rel_dev(sol.r, 0.5) < 1e-13);
  const JacobiParams basis{sol.beta, sol.alpha - sol.beta};
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < sol.coeffs.size(); ++i) {
    const double lhs = sol.coeffs[i] * sol.eigenvalues[i] * jacobi::norm_sq(i, basis);
    worst = std::max(worst, std::fabs(lhs - sol.rhs_coeffs[i]));
    scale = std::max(scale, std::fabs(sol.rhs_coeffs[i]));
    CHECK(sol.eigenvalues[i] > 0.0);
  }
  CHECK(worst < 1e-12 * scale);
  CHECK(sol.kernel_mass > 0.0);
  CHECK(sol.kernel_coefficient ==
        doctest::Approx(sol.flux_mismatch / sol.kernel_mass).epsilon(1e-15));
}

TEST_CASE("an injected unit rhs coefficient inverts one diagonal entry") {
  const double alpha = 1.6, beta = 0.8;
  ProblemSpec pb = manufactured_problem(alpha, 0.5, 0.8);
  pb.rhs.clear();
  pb.rhs.push_back({1.0 / jacobi::norm_sq(0, {beta, alpha - beta}), 0.0, 0.0, {}});
  // f = G_0 / norm_sq(0)  =>  f_0 = 1, others 0
  const SpectralSolution sol = assemble(pb, 6, 64);
  CHECK(testutil::rel_dev(sol.rhs_coeffs[0], 1.0) < 1e-13);
  CHECK(testutil::rel_dev(sol.coeffs[0],
                          1.0 / (sol.eigenvalues[0] * jacobi::norm_sq(0, {beta, alpha - beta})))
        < 1e-13);
  for (std::size_t i = 1; i < sol.coeffs.size(); ++i) CHECK(std::fabs(sol.coeffs[i]) < 1e-13);
}

TEST_CASE("both parameterizations produce identical coefficients") {
  const double alpha = 1.6, r = 0.37;
  const ProblemSpec by_r = manufactured_problem(alpha, r, 0.8);
  const ProblemSpec by_beta = manufactured_problem_beta(alpha, solve_beta(alpha, r), 0.8);
  const SpectralSolution s1 = assemble(by_r, 20, 128);
  const SpectralSolution s2 = assemble(by_beta, 20, 128);
  for (std::size_t i = 0; i < s1.coeffs.size(); ++i)
    CHECK(std::fabs(s1.coeffs[i] - s2.coeffs[i]) <
          1e-13 * std::max(1.0, std::fabs(s1.coeffs[i])));
}

TEST_CASE("w evaluation vanishes at the boundary and tracks the closed form") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const SpectralSolution sol = assemble(pb, 36, 256);
  CHECK(eval_w(sol, 0.0) == 0.0);
  CHECK(eval_w(sol, 1.0) == 0.0);
  CHECK(std::fabs(eval_w(sol, 0.5) - exact_w(1.6, 0.8, 0.5)) < 1e-5);
  CHECK(std::fabs(eval_w(sol, 0.7) - exact_w(1.6, 0.8, 0.7)) < 1e-5);
}

TEST_CASE("Dw evaluation matches finite differences of w") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const SpectralSolution sol = assemble(pb, 24, 200);
  testutil::Lcg rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const double x = rng.next(0.05, 0.95);
    const double fd = oracles::central_diff([&](double t) { return eval_w(sol, t); }, x);
    CHECK(std::fabs(eval_dw(sol, x) - fd) < 1e-6 * std::max(1.0, std::fabs(fd)));
  }
  CHECK_THROWS_AS(eval_dw(sol, 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_dw(sol, 1.0), std::domain_error);
}

TEST_CASE("kernel mass closed forms") {
  const double alpha = 1.6, beta = 0.8;
  const ProblemSpec unit_k = constant_k_problem(alpha, 0.5, 1.0);
  CHECK(testutil::rel_dev(kernel_mass(unit_k, beta, 256), beta_fn(alpha - beta, beta)) < 1e-13);
  // frozen: B(0.8, 0.8)
  CHECK(testutil::rel_dev(kernel_mass(unit_k, beta, 256), 1.5169642327929231) < 1e-12);

  // manufactured K: 1/K = 1 + s^gamma expands into two Beta integrals
  const double gamma = 0.8;
  const ProblemSpec pb = manufactured_problem(alpha, 0.5, gamma);
  const double expected = beta_fn(alpha - beta, beta) + beta_fn(alpha - beta, beta + gamma);
  CHECK(std::fabs(kernel_mass(pb, beta, 2048) - expected) < 5e-12);
  CHECK_THROWS_AS(kernel_mass(pb, alpha - 1.0, 256), std::domain_error);
  CHECK_THROWS_AS(kernel_mass(pb, 1.0, 256), std::domain_error);
}

TEST_CASE("flux mismatch vanishes for constant diffusivity") {
  const ProblemSpec pb = constant_k_problem(1.6, 0.5, 2.0);
  const SpectralSolution sol = assemble(pb, 24, 200);
  CHECK(std::fabs(sol.flux_mismatch) < 1e-13);
  ProblemSpec zero_f = pb;
  zero_f.rhs.clear();
  zero_f.rhs.push_back({0.0, 0.0, 0.0, {}});
  const SpectralSolution trivial = assemble(zero_f, 8, 64);
  CHECK(trivial.flux_mismatch == 0.0);
}

TEST_CASE("flux mismatch converges to the reference value") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const ExactSolution exact(1.6, 0.8, pb.diffusivity.inv_k, 2048);
  std::vector<int> ns = {8, 16, 32};
  std::vector<double> errs;
  for (int n : ns) {
    const SpectralSolution sol = assemble(pb, n, std::max(200, 4 * n));
    errs.push_back(std::fabs(sol.flux_mismatch - exact.flux_mismatch()));
  }
  CHECK(errs[1] < errs[0]);
  CHECK(errs[2] < errs[1]);
  // Dw-driven bound: decay near (alpha - 1) + t = 1.2
  CHECK(fit_rate(ns, errs) > 0.8);
}

TEST_CASE("u evaluation: boundaries, interior accuracy, constant-K collapse") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const SpectralSolution sol = assemble(pb, 36, 256);
  const SolutionEvaluator ev(sol, pb, 256);
  CHECK(ev.u(0.0) == 0.0);
  CHECK(std::fabs(ev.u(1.0)) < 1e-9);
  const ExactSolution exact(1.6, 0.8, pb.diffusivity.inv_k, 2048);
  CHECK(std::fabs(ev.u(0.5) - exact.u(0.5)) < 1e-3);
  CHECK(eval_u(sol, pb, 0.25, 256) == doctest::Approx(ev.u(0.25)).epsilon(1e-15));

  // constant K: no kernel correction, u_N = w_N / k pointwise
  const double k = 2.0;
  const ProblemSpec flat = constant_k_problem(1.6, 0.5, k);
  const SpectralSolution fsol = assemble(flat, 24, 200);
  const SolutionEvaluator fev(fsol, flat, 200);
  CHECK(std::fabs(fev.kernel_coefficient()) < 1e-13);
  for (double x : {0.15, 0.4, 0.5, 0.85, 1.0})
    CHECK(std::fabs(fev.u(x) - eval_w(fsol, x) / k) < 1e-10);
}

TEST_CASE("du matches finite differences of u") {
  const ProblemSpec pb = manufactured_problem_beta(1.3, 0.5, 0.8);
  const SpectralSolution sol = assemble(pb, 20, 200);
  const SolutionEvaluator ev(sol, pb, 200);
  for (double x : {0.2, 0.45, 0.55, 0.8}) {
    const double fd = oracles::central_diff([&](double t) { return ev.u(t); }, x);
    CHECK(std::fabs(ev.du(x) - fd) < 1e-5 * std::max(1.0, std::fabs(fd)));
  }
}

TEST_CASE("transformed-solution errors decrease over the sweep") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const QuadratureRule norm_rule = gauss_jacobi_rule(512, {-0.8, -0.8});
  double prev = 1e300;
  for (int n : {8, 16, 24}) {
    const SpectralSolution sol = assemble(pb, n, std::max(200, 4 * n));
    const double err = weighted_error_norm(
        norm_rule, [&](double x) { return exact_w(1.6, 0.8, x); },
        [&](double x) { return eval_w(sol, x); });
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("assemble rejects invalid problems") {
  ProblemSpec pb = manufactured_problem(1.6, 0.5, 0.8);
  pb.r.reset();
  CHECK_THROWS_AS(assemble(pb, 8, 64), std::invalid_argument);
  ProblemSpec bad_beta = manufactured_problem(1.6, 0.5, 0.8);
  bad_beta.beta = 0.6;  // == alpha - 1, the open-interval boundary
  CHECK_THROWS_AS(assemble(bad_beta, 8, 64), std::domain_error);
  ProblemSpec bad_bounds = manufactured_problem(1.6, 0.5, 0.8);
  bad_bounds.diffusivity.k_max = 0.9;  // K(0) = 1 leaves the declared range
  CHECK_THROWS_AS(assemble(bad_bounds, 8, 64), std::domain_error);
  CHECK_THROWS_AS(assemble(manufactured_problem(1.6, 0.5, 0.8), 8, 8), std::invalid_argument);
}
