#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdspec/analysis.hpp"
#include "fdspec/problem.hpp"
#include "fdspec/solver.hpp"

namespace fdspec {

enum class ReferenceMode { exact, self_converged };

/// Batch configuration for a convergence sweep over the manufactured family.
/// Exactly one of r / beta is normally set; when both are given beta is
/// primary and the report carries the consistency residual of the pair.
struct RunConfig {
  double alpha = 0.0;
  std::optional<double> r;
  std::optional<double> beta;
  double gamma = 0.8;
  std::vector<int> n_list;    // strictly increasing
  int quad_order = 0;         // 0 means max(200, 4N) per sweep entry
  int quad_order_ref = 2048;  // reference-side integrals and error norms
  int linf_samples = 2001;
  ReferenceMode reference = ReferenceMode::exact;
  int reference_degree = 0;   // for self_converged
};

struct ConvergenceRow {
  int n = 0;
  double err_u_l2w = 0.0;
  double err_u_dl2w = 0.0;
  double err_u_linf = 0.0;
  double err_w_l2w = 0.0;
  double err_dw_l2w = 0.0;
  std::optional<double> kappa_u_l2w;
  std::optional<double> kappa_u_dl2w;
  std::optional<double> kappa_u_linf;
  std::optional<double> kappa_w_l2w;
  std::optional<double> kappa_dw_l2w;
};

struct FittedRates {
  double u_l2w = 0.0;
  double u_dl2w = 0.0;
  double u_linf = 0.0;
  double w_l2w = 0.0;
  double dw_l2w = 0.0;
};

struct ConvergenceReport {
  double alpha = 0.0;
  double r = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool beta_primary = false;
  double beta_residual = 0.0;  // |splitting residual| of a user-supplied (r, beta) pair
  int quad_order = 0;          // 0 = per-N default
  int quad_order_ref = 0;
  int linf_samples = 0;
  std::string reference;       // "exact" or "self-converged:<N>"
  RegularityResult regularity;
  bool k_condition = false;
  RatePrediction prediction;
  std::vector<ConvergenceRow> rows;
  FittedRates fitted;
};

/// Runs the full sweep: assembles each solution, measures the five error
/// norms against the reference at quad_order_ref, fills per-step rates and
/// log-log least-squares fits, and attaches the theory side. Any failure
/// aborts the whole study (no partial reports).
ConvergenceReport run_convergence_study(const RunConfig& config);

/// CSV layout (fixed):
///   N,err_u_L2w,kappa_u_L2w,err_u_DL2w,kappa_u_DL2w,err_u_Linf,kappa_u_Linf,err_w_L2w,kappa_w_L2w
/// errors as %.2E, rates with two decimals, empty rate cells on the first
/// row, and a trailing `Pred` row with empty error cells.
void write_csv(const ConvergenceReport& report, std::ostream& os);

/// Full report, including metadata and the Dw error column, as JSON.
void write_json(const ConvergenceReport& report, std::ostream& os);

/// Inverse of write_json (used for round-trip checks and downstream tools).
ConvergenceReport read_json(std::istream& is);

struct PlotRow {
  double x = 0.0;
  double u = 0.0;
  double u_n = 0.0;
  double diff = 0.0;
};

/// Uniform-grid samples (endpoints included) of the reference solution, the
/// degree-n spectral solution, and their difference.
std::vector<PlotRow> plot_data(const RunConfig& config, int degree, int samples);

/// CSV with header `x,u,u_N,diff`.
void write_plot_csv(std::span<const PlotRow> rows, std::ostream& os);

}  // namespace fdspec
