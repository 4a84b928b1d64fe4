#include "fracopt/report_io.hpp"

#include <iomanip>
#include <limits>

#include "json.hpp"

namespace fracopt {

namespace {

void full_precision(std::ostream& out) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
}

std::string label_or_index(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : "asset" + std::to_string(i + 1);
}

}  // namespace

void write_backtest_json(std::ostream& out, const BacktestReport& report,
                         const BacktestConfig& cfg, const std::vector<std::string>& asset_labels) {
  nlohmann::json j;
  j["strategy"] = std::string(to_string(cfg.strategy));
  j["window"] = cfg.window;
  j["eps"] = cfg.eps_hat;
  j["unit"] = std::string(to_string(cfg.returns_unit));
  j["sharpe"] = report.sharpe ? nlohmann::json(*report.sharpe) : nlohmann::json(nullptr);
  j["final_wealth"] = report.final_wealth;
  j["periods"] = report.realized_returns.size();
  const std::size_t n = report.weights_history.empty() ? 0 : report.weights_history.front().size();
  nlohmann::json assets = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) assets.push_back(label_or_index(asset_labels, i));
  j["assets"] = assets;
  out << j.dump(2) << '\n';
}

void write_backtest_csv(std::ostream& out, const BacktestReport& report,
                        const ReturnsMatrix& returns) {
  const auto old_precision = out.precision();
  full_precision(out);
  out << "period,label,return,wealth";
  for (std::size_t i = 0; i < returns.assets(); ++i) {
    out << ",w_" << label_or_index(returns.asset_labels, i);
  }
  out << '\n';
  for (std::size_t t = 0; t < report.realized_returns.size(); ++t) {
    out << t + 1 << ',' << (t < returns.period_labels.size() ? returns.period_labels[t] : "")
        << ',' << report.realized_returns[t] << ',' << report.wealth_path[t];
    for (double w : report.weights_history[t].values()) out << ',' << w;
    out << '\n';
  }
  out.precision(old_precision);
}

void write_sharpe_json(std::ostream& out, const SrmResult& result, const SharpeModel& model,
                       double alpha, const std::vector<std::string>& asset_labels) {
  nlohmann::json j;
  nlohmann::json weights = nlohmann::json::object();
  for (std::size_t i = 0; i < result.weights.size(); ++i) {
    weights[label_or_index(asset_labels, i)] = result.weights[i];
  }
  j["weights"] = weights;
  j["sharpe"] = result.sharpe;
  j["global_certificate"] = result.global_certificate;
  j["iterations"] = result.solve.iterations;
  j["status"] = to_string(result.solve.status);
  j["eps"] = model.eps_hat;
  j["lambda1"] = model.lambda1;
  j["alpha"] = alpha;
  out << j.dump(2) << '\n';
}

void write_trace_csv(std::ostream& out, const SolveTrace& trace,
                     const std::string& coordinate_prefix) {
  const auto old_precision = out.precision();
  full_precision(out);
  const std::size_t n = trace.iterates.empty() ? 0 : trace.iterates.front().size();
  out << 'k';
  for (std::size_t i = 0; i < n; ++i) out << ',' << coordinate_prefix << i + 1;
  out << ",objective\n";
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    out << k;
    for (double v : trace.iterates[k]) out << ',' << v;
    out << ',' << trace.ratios[k] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace fracopt
