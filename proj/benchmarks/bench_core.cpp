#include <benchmark/benchmark.h>

#include "fdspec/convergence.hpp"
#include "fdspec/problem.hpp"
#include "fdspec/quadrature.hpp"
#include "fdspec/solver.hpp"
#include "fdspec/special_functions.hpp"

namespace {

void BM_GaussJacobiRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rule = fdspec::gauss_jacobi_rule(order, {-0.2, -0.5});
    benchmark::DoNotOptimize(rule.nodes.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GaussJacobiRule)->RangeMultiplier(4)->Range(32, 2048)->Complexity();

void BM_Hyp2f1Series(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdspec::hyp2f1(0.2, 0.8, 1.8, x));
  }
}
BENCHMARK(BM_Hyp2f1Series);

void BM_Hyp2f1NearUnity(benchmark::State& state) {
  double x = 1.0 - 3e-7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdspec::hyp2f1(0.2, 0.8, 1.8, x));
  }
}
BENCHMARK(BM_Hyp2f1NearUnity);

void BM_Assemble(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const fdspec::ProblemSpec pb = fdspec::manufactured_problem_beta(1.6, 0.8, 0.8);
  for (auto _ : state) {
    auto sol = fdspec::assemble(pb, degree, std::max(200, 4 * degree));
    benchmark::DoNotOptimize(sol.coeffs.data());
  }
}
BENCHMARK(BM_Assemble)->Arg(16)->Arg(36)->Arg(96);

void BM_EvalU(benchmark::State& state) {
  const fdspec::ProblemSpec pb = fdspec::manufactured_problem_beta(1.6, 0.8, 0.8);
  const fdspec::SpectralSolution sol = fdspec::assemble(pb, 36, 256);
  const fdspec::SolutionEvaluator ev(sol, pb, 256);
  double x = 0.0;
  for (auto _ : state) {
    x += 1.0 / 4096.0;
    if (x >= 1.0) x -= 1.0;
    benchmark::DoNotOptimize(ev.u(x));
  }
}
BENCHMARK(BM_EvalU);

void BM_ConvergenceStudySmall(benchmark::State& state) {
  fdspec::RunConfig cfg;
  cfg.alpha = 1.6;
  cfg.beta = 0.8;
  cfg.gamma = 0.8;
  cfg.n_list = {8, 12, 16};
  cfg.quad_order = 64;
  cfg.quad_order_ref = 256;
  cfg.linf_samples = 201;
  for (auto _ : state) {
    auto report = fdspec::run_convergence_study(cfg);
    benchmark::DoNotOptimize(report.rows.data());
  }
}
BENCHMARK(BM_ConvergenceStudySmall)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
