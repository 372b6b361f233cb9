#include <cmath>

#include <doctest.h>

#include "fdspec/problem.hpp"
#include "fdspec/quadrature.hpp"
#include "fdspec/solver.hpp"
#include "fdspec/special_functions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fdspec;

TEST_CASE("manufactured problem carries the declared structure") {
  const ProblemSpec pb = manufactured_problem(1.6, 0.5, 0.8);
  CHECK(pb.alpha == 1.6);
  CHECK(pb.r.value() == 0.5);
  CHECK_FALSE(pb.beta.has_value());
  CHECK(pb.diffusivity.inv_k(0.5) == doctest::Approx(1.0 + std::pow(0.5, 0.8)).epsilon(1e-15));
  CHECK(pb.diffusivity.d_inv_k(0.5) ==
        doctest::Approx(0.8 * std::pow(0.5, -0.2)).epsilon(1e-14));
  CHECK(pb.diffusivity.k_min == 0.5);
  CHECK(pb.diffusivity.k_max == 1.0);
  REQUIRE(pb.rhs.size() == 2);
  const double scale = std::exp(std::lgamma(2.0 - 1.6));
  CHECK(pb.rhs[0].coeff == doctest::Approx(-0.5 / scale).epsilon(1e-13));
  CHECK(pb.rhs[0].exp_at_zero == doctest::Approx(1.0 - 1.6));
  CHECK(pb.rhs[0].exp_at_one == 0.0);
  CHECK(pb.rhs[1].coeff == doctest::Approx(0.5 / scale).epsilon(1e-13));
  CHECK(pb.rhs[1].exp_at_one == doctest::Approx(1.0 - 1.6));

  const double x = 0.37;
  const double expected = (-0.5 * std::pow(x, -0.6) + 0.5 * std::pow(1.0 - x, -0.6)) / scale;
  CHECK(eval_rhs(pb, x) == doctest::Approx(expected).epsilon(1e-13));

  CHECK_THROWS_AS(manufactured_problem(2.3, 0.5, 0.8), std::domain_error);
  CHECK_THROWS_AS(manufactured_problem(1.6, 1.2, 0.8), std::domain_error);
  CHECK_THROWS_AS(manufactured_problem(1.6, 0.5, -0.1), std::domain_error);
}

TEST_CASE("symmetric-weight right-hand side cancels against its reflection") {
  const ProblemSpec pb = manufactured_problem(1.6, 0.5, 0.8);
  for (double x : {0.1, 0.25, 0.4, 0.47}) {
    CHECK(std::fabs(eval_rhs(pb, x) + eval_rhs(pb, 1.0 - x)) < 1e-12);
  }
}

TEST_CASE("beta-primary construction derives the consistent r") {
  const ProblemSpec pb = manufactured_problem_beta(1.3, 0.5, 0.8);
  CHECK(pb.beta.value() == 0.5);
  CHECK_FALSE(pb.r.has_value());
  // f was built with r from the sine relation
  const double r = r_from_beta(1.3, 0.5);
  CHECK(testutil::rel_dev(r, 0.62980809184124997) < 1e-13);
  const double scale = std::exp(std::lgamma(0.7));
  CHECK(pb.rhs[0].coeff == doctest::Approx(-r / scale).epsilon(1e-13));
}

TEST_CASE("closed-form w vanishes at both ends and matches the series oracle") {
  for (const auto [alpha, beta] : {std::pair{1.6, 0.8}, std::pair{1.3, 0.5}}) {
    CHECK(exact_w(alpha, beta, 0.0) == 0.0);
    CHECK(std::fabs(exact_w(alpha, beta, 1.0)) < 1e-12);
  }
  // frozen long double series values (with the x = 1 constant from the Euler
  // integral oracle)
  CHECK(std::fabs(exact_w(1.6, 0.8, 0.3) - -0.024060595343758928) < 1e-12);
  CHECK(std::fabs(exact_w(1.3, 0.5, 0.5) - -0.14069133615944107) < 1e-12);
  // symmetric case: w is odd about 1/2
  CHECK(std::fabs(exact_w(1.6, 0.8, 0.5)) < 1e-10);
  CHECK(std::fabs(exact_w(1.6, 0.8, 0.35) + exact_w(1.6, 0.8, 0.65)) < 1e-12);
  CHECK_THROWS_AS(exact_w(1.6, 0.55, 0.5), std::domain_error);  // beta below alpha - 1
  CHECK_THROWS_AS(exact_w(1.6, 1.0, 0.5), std::domain_error);
}

TEST_CASE("closed-form Dw validates against finite differences before use") {
  testutil::Lcg rng(31);
  for (const auto [alpha, beta] : {std::pair{1.6, 0.8}, std::pair{1.3, 0.5}}) {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const double x = rng.next(0.02, 0.98);
      const double fd =
          oracles::central_diff([&, a = alpha, b = beta](double t) { return exact_w(a, b, t); }, x);
      worst = std::max(worst, testutil::rel_dev(exact_dw(alpha, beta, x), fd));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("Dw integrates to zero against its own singular weight") {
  const double alpha = 1.6, beta = 0.8;
  // split off the singular factor: integral of Dw = integral 1 - C beta * kernel
  const QuadratureRule kernel = gauss_jacobi_rule(64, {alpha - beta - 1.0, beta - 1.0});
  const double c_beta = beta / hyp2f1(1.0 + beta - alpha, beta, beta + 1.0, 1.0);
  const double total = 1.0 - c_beta * integrate(kernel, [](double) { return 1.0; });
  CHECK(std::fabs(total) < 1e-12);
}

TEST_CASE("Dw is singular and negative approaching the left endpoint") {
  const double near = exact_dw(1.6, 0.8, 1e-6);
  const double nearer = exact_dw(1.6, 0.8, 1e-9);
  CHECK(near < 0.0);
  CHECK(nearer < near);
}

TEST_CASE("reference solution satisfies both boundary conditions") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const ExactSolution exact(1.6, 0.8, pb.diffusivity.inv_k, 512);
  CHECK(exact.u(0.0) == 0.0);
  CHECK(std::fabs(exact.u(1.0)) < 1e-12);
  CHECK(exact_u(pb, 0.8, 0.0, 256) == 0.0);
  CHECK(std::fabs(exact_u(pb, 0.8, 1.0, 256)) < 1e-12);
}

TEST_CASE("reference du matches finite differences of reference u") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const ExactSolution exact(1.6, 0.8, pb.diffusivity.inv_k, 1024);
  // keep the difference stencil away from the split point of the partial
  // integrals, where the two branches agree only to quadrature accuracy
  for (double x : {0.2, 0.45, 0.8}) {
    const double fd = oracles::central_diff([&](double t) { return exact.u(t); }, x);
    CHECK(testutil::rel_dev(exact.du(x), fd) < 1e-6);
  }
  // the branch seam itself closes as the order grows
  CHECK(std::fabs(exact.u(0.5) - exact.u(0.5 + 1e-15)) < 1e-10);
}

TEST_CASE("reference solution agrees with a deep spectral solve") {
  const ProblemSpec pb = manufactured_problem_beta(1.6, 0.8, 0.8);
  const ExactSolution exact(1.6, 0.8, pb.diffusivity.inv_k, 2048);
  const SpectralSolution sol = assemble(pb, 80, 512);
  const SolutionEvaluator ev(sol, pb, 512);
  CHECK(std::fabs(exact.u(0.5) - ev.u(0.5)) < 1e-6);
}
