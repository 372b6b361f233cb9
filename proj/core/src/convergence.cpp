#include "fdspec/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace fdspec {

namespace {

int effective_order(const RunConfig& config, int degree) {
  if (config.quad_order > 0) return config.quad_order;
  return std::max(200, 4 * degree);
}

void validate_config(const RunConfig& config) {
  if (!(config.alpha > 1.0 && config.alpha < 2.0))
    throw std::domain_error("run_convergence_study: alpha must lie in (1, 2)");
  if (!config.r && !config.beta)
    throw std::invalid_argument("run_convergence_study: one of r / beta is required");
  if (config.n_list.empty())
    throw std::invalid_argument("run_convergence_study: n_list must not be empty");
  for (std::size_t i = 1; i < config.n_list.size(); ++i)
    if (config.n_list[i] <= config.n_list[i - 1])
      throw std::invalid_argument("run_convergence_study: n_list must be strictly increasing");
  if (config.n_list.front() < 0)
    throw std::invalid_argument("run_convergence_study: degrees must be nonnegative");
  if (config.quad_order_ref < 1 || config.linf_samples < 2)
    throw std::invalid_argument("run_convergence_study: invalid quadrature/sampling orders");
  if (config.reference == ReferenceMode::self_converged &&
      config.reference_degree <= config.n_list.back())
    throw std::invalid_argument(
        "run_convergence_study: self-converged reference degree must exceed every sweep degree");
}

struct Reference {
  std::function<double(double)> u, du, w, dw;
  std::string label;
};

std::string sci3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2E", v);
  return buf;
}

std::string rate2(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

std::string rate2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

nlohmann::json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> opt_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

ConvergenceReport run_convergence_study(const RunConfig& config) {
  validate_config(config);

  ConvergenceReport report;
  report.alpha = config.alpha;
  report.gamma = config.gamma;
  report.beta_primary = config.beta.has_value();
  if (config.beta) {
    report.beta = *config.beta;
    report.r = config.r ? *config.r : r_from_beta(config.alpha, *config.beta);
  } else {
    report.r = *config.r;
    report.beta = solve_beta(config.alpha, *config.r);
  }
  if (config.r && config.beta)
    report.beta_residual = std::fabs(splitting_residual(config.alpha, *config.r, *config.beta));
  report.quad_order = config.quad_order;
  report.quad_order_ref = config.quad_order_ref;
  report.linf_samples = config.linf_samples;

  // beta-primary runs rebuild f with the derived r so the pair is consistent
  const ProblemSpec problem =
      config.beta ? manufactured_problem_beta(config.alpha, *config.beta, config.gamma)
                  : manufactured_problem(config.alpha, *config.r, config.gamma);

  report.regularity = f_regularity(report.alpha, report.beta);
  report.k_condition = k_condition(report.gamma, report.alpha, report.beta);
  report.prediction =
      predict_rates(report.alpha, report.beta, report.regularity.t_max, report.k_condition);

  Reference ref;
  if (config.reference == ReferenceMode::exact) {
    auto exact = std::make_shared<ExactSolution>(report.alpha, report.beta,
                                                 problem.diffusivity.inv_k,
                                                 config.quad_order_ref);
    const double alpha = report.alpha;
    const double beta = report.beta;
    ref.u = [exact](double x) { return exact->u(x); };
    ref.du = [exact](double x) { return exact->du(x); };
    ref.w = [alpha, beta](double x) { return exact_w(alpha, beta, x); };
    ref.dw = [alpha, beta](double x) { return exact_dw(alpha, beta, x); };
    ref.label = "exact";
  } else {
    const int deg = config.reference_degree;
    auto sol = std::make_shared<SpectralSolution>(
        assemble(problem, deg, std::max(effective_order(config, deg), deg + 1)));
    auto ev = std::make_shared<SolutionEvaluator>(*sol, problem, config.quad_order_ref);
    ref.u = [ev](double x) { return ev->u(x); };
    ref.du = [ev](double x) { return ev->du(x); };
    ref.w = [ev](double x) { return ev->w(x); };
    ref.dw = [ev](double x) { return ev->dw(x); };
    ref.label = "self-converged:" + std::to_string(deg);
  }
  report.reference = ref.label;

  const double ab = report.alpha - report.beta;
  const QuadratureRule l2_rule =
      gauss_jacobi_rule(config.quad_order_ref, {-ab, -report.beta});
  const QuadratureRule d_rule =
      gauss_jacobi_rule(config.quad_order_ref, {1.0 - ab, 1.0 - report.beta});

  // one kernel integrator per distinct evaluation order
  std::map<int, PartialWeightedIntegral> kernels;
  const JacobiParams kernel_exps{ab - 1.0, report.beta - 1.0};

  for (const int n : config.n_list) {
    const int order = std::max(effective_order(config, n), n + 1);
    const SpectralSolution sol = assemble(problem, n, order);
    auto it = kernels.find(order);
    if (it == kernels.end())
      it = kernels.emplace(order, PartialWeightedIntegral(kernel_exps, order)).first;
    const SolutionEvaluator ev(sol, problem, it->second);

    ConvergenceRow row;
    row.n = n;
    row.err_w_l2w = weighted_error_norm(l2_rule, ref.w, [&](double x) { return ev.w(x); });
    row.err_dw_l2w = weighted_error_norm(d_rule, ref.dw, [&](double x) { return ev.dw(x); });
    row.err_u_l2w = weighted_error_norm(l2_rule, ref.u, [&](double x) { return ev.u(x); });
    row.err_u_dl2w = weighted_error_norm(d_rule, ref.du, [&](double x) { return ev.du(x); });
    row.err_u_linf = linf_error(ref.u, [&](double x) { return ev.u(x); }, config.linf_samples);
    report.rows.push_back(row);
  }

  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    ConvergenceRow& cur = report.rows[i];
    const ConvergenceRow& prev = report.rows[i - 1];
    cur.kappa_u_l2w = convergence_rate(prev.err_u_l2w, cur.err_u_l2w, prev.n, cur.n);
    cur.kappa_u_dl2w = convergence_rate(prev.err_u_dl2w, cur.err_u_dl2w, prev.n, cur.n);
    cur.kappa_u_linf = convergence_rate(prev.err_u_linf, cur.err_u_linf, prev.n, cur.n);
    cur.kappa_w_l2w = convergence_rate(prev.err_w_l2w, cur.err_w_l2w, prev.n, cur.n);
    cur.kappa_dw_l2w = convergence_rate(prev.err_dw_l2w, cur.err_dw_l2w, prev.n, cur.n);
  }

  if (report.rows.size() >= 2) {
    std::vector<int> ns;
    std::vector<double> e1, e2, e3, e4, e5;
    for (const auto& row : report.rows) {
      ns.push_back(row.n);
      e1.push_back(row.err_u_l2w);
      e2.push_back(row.err_u_dl2w);
      e3.push_back(row.err_u_linf);
      e4.push_back(row.err_w_l2w);
      e5.push_back(row.err_dw_l2w);
    }
    report.fitted.u_l2w = fit_rate(ns, e1);
    report.fitted.u_dl2w = fit_rate(ns, e2);
    report.fitted.u_linf = fit_rate(ns, e3);
    report.fitted.w_l2w = fit_rate(ns, e4);
    report.fitted.dw_l2w = fit_rate(ns, e5);
  }
  return report;
}

void write_csv(const ConvergenceReport& report, std::ostream& os) {
  os << "N,err_u_L2w,kappa_u_L2w,err_u_DL2w,kappa_u_DL2w,err_u_Linf,kappa_u_Linf,"
        "err_w_L2w,kappa_w_L2w\n";
  for (const auto& row : report.rows) {
    os << row.n << ',' << sci3(row.err_u_l2w) << ',' << rate2(row.kappa_u_l2w) << ','
       << sci3(row.err_u_dl2w) << ',' << rate2(row.kappa_u_dl2w) << ','
       << sci3(row.err_u_linf) << ',' << rate2(row.kappa_u_linf) << ','
       << sci3(row.err_w_l2w) << ',' << rate2(row.kappa_w_l2w) << '\n';
  }
  // the w norm obeys the transformed-problem estimate regardless of the K condition
  const double w_pred = report.alpha + report.regularity.t_max;
  os << "Pred,," << rate2(report.prediction.l2_weighted) << ",,"
     << rate2(report.prediction.d_weighted) << ",," << rate2(report.prediction.linf) << ",,"
     << rate2(w_pred) << '\n';
}

void write_json(const ConvergenceReport& report, std::ostream& os) {
  nlohmann::json j;
  j["parameters"] = {
      {"alpha", report.alpha},
      {"r", report.r},
      {"beta", report.beta},
      {"gamma", report.gamma},
      {"beta_primary", report.beta_primary},
      {"beta_residual", report.beta_residual},
      {"quad_order", report.quad_order},
      {"quad_order_ref", report.quad_order_ref},
      {"linf_samples", report.linf_samples},
      {"reference", report.reference},
  };
  j["theory"] = {
      {"t_max", report.regularity.t_max},
      {"limiting_term", report.regularity.limiting_term},
      {"k_condition", report.k_condition},
      {"pred_u_l2w", report.prediction.l2_weighted},
      {"pred_u_dl2w", report.prediction.d_weighted},
      {"pred_u_linf", report.prediction.linf},
      {"pred_w_l2w", report.alpha + report.regularity.t_max},
  };
  j["fitted"] = {
      {"u_l2w", report.fitted.u_l2w},   {"u_dl2w", report.fitted.u_dl2w},
      {"u_linf", report.fitted.u_linf}, {"w_l2w", report.fitted.w_l2w},
      {"dw_l2w", report.fitted.dw_l2w},
  };
  j["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    j["rows"].push_back({
        {"n", row.n},
        {"err_u_l2w", row.err_u_l2w},
        {"err_u_dl2w", row.err_u_dl2w},
        {"err_u_linf", row.err_u_linf},
        {"err_w_l2w", row.err_w_l2w},
        {"err_dw_l2w", row.err_dw_l2w},
        {"kappa_u_l2w", opt_json(row.kappa_u_l2w)},
        {"kappa_u_dl2w", opt_json(row.kappa_u_dl2w)},
        {"kappa_u_linf", opt_json(row.kappa_u_linf)},
        {"kappa_w_l2w", opt_json(row.kappa_w_l2w)},
        {"kappa_dw_l2w", opt_json(row.kappa_dw_l2w)},
    });
  }
  os << j.dump(2) << '\n';
}

ConvergenceReport read_json(std::istream& is) {
  const nlohmann::json j = nlohmann::json::parse(is);
  ConvergenceReport report;
  const auto& p = j.at("parameters");
  report.alpha = p.at("alpha").get<double>();
  report.r = p.at("r").get<double>();
  report.beta = p.at("beta").get<double>();
  report.gamma = p.at("gamma").get<double>();
  report.beta_primary = p.at("beta_primary").get<bool>();
  report.beta_residual = p.at("beta_residual").get<double>();
  report.quad_order = p.at("quad_order").get<int>();
  report.quad_order_ref = p.at("quad_order_ref").get<int>();
  report.linf_samples = p.at("linf_samples").get<int>();
  report.reference = p.at("reference").get<std::string>();
  const auto& t = j.at("theory");
  report.regularity.t_max = t.at("t_max").get<double>();
  report.regularity.limiting_term = t.at("limiting_term").get<std::string>();
  report.k_condition = t.at("k_condition").get<bool>();
  report.prediction.l2_weighted = t.at("pred_u_l2w").get<double>();
  report.prediction.d_weighted = t.at("pred_u_dl2w").get<double>();
  report.prediction.linf = t.at("pred_u_linf").get<double>();
  report.prediction.k_condition = report.k_condition;
  const auto& f = j.at("fitted");
  report.fitted.u_l2w = f.at("u_l2w").get<double>();
  report.fitted.u_dl2w = f.at("u_dl2w").get<double>();
  report.fitted.u_linf = f.at("u_linf").get<double>();
  report.fitted.w_l2w = f.at("w_l2w").get<double>();
  report.fitted.dw_l2w = f.at("dw_l2w").get<double>();
  for (const auto& rj : j.at("rows")) {
    ConvergenceRow row;
    row.n = rj.at("n").get<int>();
    row.err_u_l2w = rj.at("err_u_l2w").get<double>();
    row.err_u_dl2w = rj.at("err_u_dl2w").get<double>();
    row.err_u_linf = rj.at("err_u_linf").get<double>();
    row.err_w_l2w = rj.at("err_w_l2w").get<double>();
    row.err_dw_l2w = rj.at("err_dw_l2w").get<double>();
    row.kappa_u_l2w = opt_from_json(rj.at("kappa_u_l2w"));
    row.kappa_u_dl2w = opt_from_json(rj.at("kappa_u_dl2w"));
    row.kappa_u_linf = opt_from_json(rj.at("kappa_u_linf"));
    row.kappa_w_l2w = opt_from_json(rj.at("kappa_w_l2w"));
    row.kappa_dw_l2w = opt_from_json(rj.at("kappa_dw_l2w"));
    report.rows.push_back(row);
  }
  return report;
}

std::vector<PlotRow> plot_data(const RunConfig& config, int degree, int samples) {
  if (samples < 2) throw std::invalid_argument("plot_data: need at least two samples");
  RunConfig single = config;
  single.n_list = {degree};
  validate_config(single);

  const ProblemSpec problem =
      config.beta ? manufactured_problem_beta(config.alpha, *config.beta, config.gamma)
                  : manufactured_problem(config.alpha, *config.r, config.gamma);
  const double beta =
      config.beta ? *config.beta : solve_beta(config.alpha, *config.r);
  const ExactSolution exact(config.alpha, beta, problem.diffusivity.inv_k,
                            config.quad_order_ref);
  const int order = std::max(effective_order(config, degree), degree + 1);
  const SpectralSolution sol = assemble(problem, degree, order);
  const SolutionEvaluator ev(sol, problem, order);

  std::vector<PlotRow> rows;
  rows.reserve(samples);
  for (int j = 0; j < samples; ++j) {
    const double x = static_cast<double>(j) / (samples - 1);
    PlotRow row;
    row.x = x;
    row.u = exact.u(x);
    row.u_n = ev.u(x);
    row.diff = row.u - row.u_n;
    rows.push_back(row);
  }
  return rows;
}

void write_plot_csv(std::span<const PlotRow> rows, std::ostream& os) {
  os << "x,u,u_N,diff\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.8E,%.10E,%.10E,%.10E\n", row.x, row.u, row.u_n, row.diff);
    os << buf;
  }
}

}  // namespace fdspec
