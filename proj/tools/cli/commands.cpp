#include "cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracopt/fracopt.hpp"

namespace fracopt::cli {

namespace {

namespace fs = std::filesystem;

/// Bad flag values detected before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, const std::string& flag,
                               std::size_t expected) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      if (used != cell.size() || !std::isfinite(v)) throw std::invalid_argument(cell);
      values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + cell + "' is not a number");
    }
  }
  if (expected != 0 && values.size() != expected) {
    throw UsageError(flag + " expects " + std::to_string(expected) + " comma-separated values");
  }
  return values;
}

std::string fmt4(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << (v == 0.0 ? 0.0 : v);
  return os.str();
}

std::string fmt_point(const Vector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += fmt4(x[i]);
  }
  return s + ")";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InsufficientData:
    case ErrorKind::WealthWipeout:
      return kData;
    case ErrorKind::InvalidParameter:
      return kUsage;
    default:
      return kSolver;
  }
}

fs::path ensure_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(ErrorKind::ParseError, "cannot create output directory '" + dir + "'");
  return p;
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  writer(out);
}

void check_fraction(double frac) {
  if (!(frac > 0.0 && frac < 1.0)) throw UsageError("--alpha-frac must lie in (0, 1)");
}

void check_positive(double v, const std::string& flag) {
  if (!(v > 0.0)) throw UsageError(flag + " must be positive");
}

ReturnsUnit parse_unit(const std::string& s) {
  if (s == "decimal") return ReturnsUnit::Decimal;
  if (s == "percent") return ReturnsUnit::Percent;
  throw UsageError("--unit must be 'decimal' or 'percent'");
}

LabelColumn parse_labels(const std::string& s) {
  if (s == "auto") return LabelColumn::Auto;
  if (s == "present") return LabelColumn::Present;
  if (s == "absent") return LabelColumn::Absent;
  throw UsageError("--labels must be 'auto', 'present' or 'absent'");
}

struct SolveFlags {
  std::string x0;
  double alpha_frac = 0.99;
  double tol = 1e-5;
  std::size_t max_iter = 100000;
  bool trace = false;
  std::string out_dir = ".";
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--x0", f.x0, "Start point, comma separated")->capture_default_str();
  cmd->add_option("--alpha-frac", f.alpha_frac, "Step size as a fraction of the step bound")
      ->capture_default_str();
  cmd->add_option("--tol", f.tol, "Relative-change stopping tolerance")->capture_default_str();
  cmd->add_option("--max-iter", f.max_iter, "Iteration limit")->capture_default_str();
  cmd->add_flag("--trace", f.trace, "Write the iterate trace as CSV into --out");
  cmd->add_option("--out", f.out_dir, "Output directory")->capture_default_str();
}

PgaConfig pga_config(const FractionalProblem& problem, const SolveFlags& f) {
  check_fraction(f.alpha_frac);
  check_positive(f.tol, "--tol");
  if (f.max_iter < 1) throw UsageError("--max-iter must be >= 1");
  PgaConfig cfg = default_pga_config(problem, f.alpha_frac);
  cfg.tol = f.tol;
  cfg.max_iter = f.max_iter;
  cfg.record_trace = f.trace;
  return cfg;
}

void report_solve(std::ostream& out, const SolveResult& result, double alpha) {
  out << "alpha: " << fmt4(alpha) << " (" << std::setprecision(10) << alpha << ")\n"
      << "status: " << to_string(result.status) << "\n"
      << "iterations: " << result.iterations << "\n"
      << "x*: " << fmt_point(result.x_star) << "\n"
      << "objective f/g: " << fmt4(result.ratio) << "\n"
      << "fixed-point residual: " << std::scientific << std::setprecision(3)
      << result.fixed_point_residual << std::defaultfloat << "\n";
}

int finish_trace(std::ostream& out, const SolveResult& result, const SolveFlags& f,
                 const std::string& name) {
  if (f.trace && result.trace) {
    const fs::path path = ensure_dir(f.out_dir) / name;
    write_file(path, [&](std::ostream& os) { write_trace_csv(os, *result.trace); });
    out << "trace: " << path.string() << "\n";
  }
  return result.status == SolveStatus::Converged ? kSuccess : kSolver;
}

int cmd_sim1(const std::string& p_text, const SolveFlags& f, std::ostream& out,
             std::ostream& err) {
  Sim1Params params{Vector(parse_list(p_text, "--p", 2))};
  try {
    validate(params);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Vector x0(parse_list(f.x0, "--x0", 2));
  const FractionalProblem problem = build_sim1(params);
  const PgaConfig cfg = pga_config(problem, f);

  const SolveResult result = pga_solve(problem, x0, cfg);
  const Vector analytic = sim1_analytic_solution(params);
  out << "Sim1-PGA p = " << fmt_point(params.p) << "\n";
  report_solve(out, result, cfg.alpha);
  out << "analytic solution: " << fmt_point(analytic)
      << "  distance: " << fmt4(norm2(result.x_star - analytic)) << "\n";
  if (result.status != SolveStatus::Converged) err << "warning: iteration limit reached\n";
  return finish_trace(out, result, f, "sim1_trace.csv");
}

int cmd_sim2(double a0, const std::string& a_text, double global_tol, const SolveFlags& f,
             std::ostream& out, std::ostream& err) {
  const auto a = parse_list(a_text, "--a", 6);
  Sim2Params params{a0, {a[0], a[1], a[2], a[3], a[4], a[5]}};
  try {
    validate(params);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  check_positive(global_tol, "--global-tol");
  const Vector x0(parse_list(f.x0, "--x0", 2));
  const FractionalProblem problem = build_sim2(params);
  const PgaConfig cfg = pga_config(problem, f);

  const SolveResult result = pga_solve(problem, x0, cfg);
  out << "Sim2-PGA a0 = " << fmt4(a0) << "\n";
  report_solve(out, result, cfg.alpha);
  out << "|x1 - 0|: " << std::scientific << std::setprecision(3) << std::abs(result.x_star[0])
      << std::defaultfloat << "\n"
      << "global optimum (tol " << global_tol
      << "): " << (sim2_is_global(params, result.x_star, global_tol) ? "yes" : "no") << "\n";
  if (result.status != SolveStatus::Converged) err << "warning: iteration limit reached\n";
  return finish_trace(out, result, f, "sim2_trace.csv");
}

struct DataFlags {
  std::string data;
  std::string unit = "decimal";
  std::string labels = "auto";
  double eps = 1e-4;
  std::string out_dir = ".";
};

void add_data_flags(CLI::App* cmd, DataFlags& d) {
  cmd->add_option("--data", d.data, "Returns CSV (header row of asset labels)")->required();
  cmd->add_option("--unit", d.unit, "decimal or percent")->capture_default_str();
  cmd->add_option("--labels", d.labels, "Period label column: auto, present, absent")
      ->capture_default_str();
  cmd->add_option("--eps", d.eps, "Variance regulariser eps_hat")->capture_default_str();
  cmd->add_option("--out", d.out_dir, "Output directory")->capture_default_str();
}

int cmd_sharpe(const DataFlags& d, double tol, std::size_t max_iter, std::ostream& out) {
  const ReturnsUnit unit = parse_unit(d.unit);
  const LabelColumn labels = parse_labels(d.labels);
  check_positive(d.eps, "--eps");
  check_positive(tol, "--tol");

  const ReturnsMatrix returns = load_returns_csv(d.data, unit, labels);
  const SharpeModel model = build_sharpe_model(returns, d.eps);
  SrmOptions options;
  options.tol = tol;
  options.max_iter = max_iter;
  const SrmResult result = srm_pga(model, options);
  const double alpha = options.alpha_fraction * model.step_bound;

  out << "SRM-PGA on " << returns.periods() << " periods x " << returns.assets() << " assets\n"
      << "status: " << to_string(result.solve.status)
      << "  iterations: " << result.solve.iterations << "\n";
  for (std::size_t i = 0; i < result.weights.size(); ++i) {
    const std::string label =
        i < returns.asset_labels.size() ? returns.asset_labels[i] : "asset" + std::to_string(i + 1);
    out << "  " << label << ": " << fmt4(result.weights[i]) << "\n";
  }
  out << "Sharpe S(w*): " << fmt4(result.sharpe) << "\n"
      << "global certificate: " << (result.global_certificate ? "yes" : "no") << "\n";

  const fs::path path = ensure_dir(d.out_dir) / "sharpe.json";
  write_file(path, [&](std::ostream& os) {
    write_sharpe_json(os, result, model, alpha, returns.asset_labels);
  });
  out << "report: " << path.string() << "\n";
  return result.solve.status == SolveStatus::Converged ? kSuccess : kSolver;
}

int cmd_backtest(const DataFlags& d, const std::string& strategy_name, std::size_t window,
                 unsigned threads, std::ostream& out) {
  const ReturnsUnit unit = parse_unit(d.unit);
  const LabelColumn labels = parse_labels(d.labels);
  const auto strategy = parse_strategy(strategy_name);
  if (!strategy) throw UsageError("--strategy must be srm-pga, one-over-n or market");
  if (window < 2) throw UsageError("--window must be >= 2");
  check_positive(d.eps, "--eps");
  if (threads < 1) throw UsageError("--threads must be >= 1");

  const ReturnsMatrix returns = load_returns_csv(d.data, unit, labels);
  BacktestConfig cfg;
  cfg.window = window;
  cfg.strategy = *strategy;
  cfg.eps_hat = d.eps;
  cfg.returns_unit = unit;
  cfg.threads = threads;
  const BacktestReport report = run_backtest(returns, cfg);

  const fs::path dir = ensure_dir(d.out_dir);
  write_file(dir / "backtest_report.json", [&](std::ostream& os) {
    write_backtest_json(os, report, cfg, returns.asset_labels);
  });
  write_file(dir / "backtest_periods.csv",
             [&](std::ostream& os) { write_backtest_csv(os, report, returns); });

  out << "strategy: " << to_string(cfg.strategy) << "  window: " << cfg.window
      << "  periods: " << report.realized_returns.size() << "\n"
      << "Sharpe: " << (report.sharpe ? fmt4(*report.sharpe) : std::string("undefined (zero variance)"))
      << "\n"
      << "final wealth: " << fmt4(report.final_wealth) << "\n"
      << "report: " << (dir / "backtest_report.json").string() << "\n";
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional programming solvers, worked examples and Sharpe backtests", "fracopt"};
  app.require_subcommand(1);

  std::string sim1_p;
  SolveFlags sim1_flags;
  sim1_flags.x0 = "0.5,0.5";
  auto* sim1 = app.add_subcommand("sim1", "min p^T x / ||x|| over the 2-simplex");
  sim1->add_option("--p", sim1_p, "Numerator coefficients p1,p2")->required();
  add_solve_flags(sim1, sim1_flags);

  double sim2_a0 = 100.0;
  std::string sim2_a = "4,2,3,3,2,3";
  double sim2_global_tol = 1e-4;
  SolveFlags sim2_flags;
  sim2_flags.x0 = "50,50";
  sim2_flags.tol = 1e-7;
  auto* sim2 = app.add_subcommand("sim2", "quadratic ratio over the band |x2| <= a0");
  sim2->add_option("--a0", sim2_a0, "Band half-width")->capture_default_str();
  sim2->add_option("--a", sim2_a, "Coefficients a1,...,a6")->capture_default_str();
  sim2->add_option("--global-tol", sim2_global_tol, "Tolerance of the global-optimum check")
      ->capture_default_str();
  add_solve_flags(sim2, sim2_flags);

  DataFlags sharpe_flags;
  double sharpe_tol = 1e-5;
  std::size_t sharpe_max_iter = 100000;
  auto* sharpe = app.add_subcommand("sharpe", "maximise the regularised Sharpe ratio");
  add_data_flags(sharpe, sharpe_flags);
  sharpe->add_option("--tol", sharpe_tol, "Relative-change stopping tolerance")
      ->capture_default_str();
  sharpe->add_option("--max-iter", sharpe_max_iter, "Iteration limit")->capture_default_str();

  DataFlags bt_flags;
  std::string bt_strategy = "srm-pga";
  std::size_t bt_window = 20;
  unsigned bt_threads = 1;
  auto* backtest = app.add_subcommand("backtest", "moving-window portfolio backtest");
  add_data_flags(backtest, bt_flags);
  backtest->add_option("--strategy", bt_strategy, "srm-pga, one-over-n or market")
      ->capture_default_str();
  backtest->add_option("--window", bt_window, "Trailing window length")->capture_default_str();
  backtest->add_option("--threads", bt_threads, "Worker threads for srm-pga")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*sim1) return cmd_sim1(sim1_p, sim1_flags, out, err);
    if (*sim2) return cmd_sim2(sim2_a0, sim2_a, sim2_global_tol, sim2_flags, out, err);
    if (*sharpe) return cmd_sharpe(sharpe_flags, sharpe_tol, sharpe_max_iter, out);
    if (*backtest) return cmd_backtest(bt_flags, bt_strategy, bt_window, bt_threads, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fracopt::cli
