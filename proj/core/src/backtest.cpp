#include "fracopt/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "fracopt/error.hpp"

namespace fracopt {

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::SrmPga: return "srm-pga";
    case Strategy::OneOverN: return "one-over-n";
    case Strategy::Market: return "market";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  if (name == "srm-pga") return Strategy::SrmPga;
  if (name == "one-over-n") return Strategy::OneOverN;
  if (name == "market") return Strategy::Market;
  return std::nullopt;
}

std::string_view to_string(ReturnsUnit unit) noexcept {
  return unit == ReturnsUnit::Percent ? "percent" : "decimal";
}

double compute_sharpe(std::span<const double> returns) {
  const std::size_t n = returns.size();
  if (n < 2) {
    throw Error(ErrorKind::InsufficientData, "Sharpe ratio needs at least 2 returns");
  }
  double mean = 0.0;
  for (double r : returns) mean += r;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double r : returns) ss += (r - mean) * (r - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) throw Error(ErrorKind::DegenerateSeries, "return series has zero variance");
  return mean / sd;
}

WealthCurve compute_wealth(std::span<const double> returns) {
  WealthCurve curve;
  curve.path.reserve(returns.size());
  double w = 1.0;
  for (std::size_t t = 0; t < returns.size(); ++t) {
    if (!(returns[t] > -1.0)) {
      throw Error(ErrorKind::WealthWipeout,
                  "return " + std::to_string(returns[t]) + " at period " + std::to_string(t + 1) +
                      " wipes out wealth");
    }
    w *= 1.0 + returns[t];
    curve.path.push_back(w);
  }
  curve.final_wealth = w;
  return curve;
}

Vector market_strategy_step(const Vector& state, const Vector& price_relatives) {
  if (state.size() != price_relatives.size()) {
    throw Error(ErrorKind::DimensionError, "market step: weights and price relatives differ in size");
  }
  std::vector<double> held(state.size());
  double total = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    held[i] = state[i] * price_relatives[i];
    total += held[i];
  }
  if (!(total > 0.0)) throw Error(ErrorKind::WealthWipeout, "portfolio value fell to zero");
  for (double& h : held) h /= total;
  return Vector(std::move(held));
}

namespace {

Vector price_relatives(const Matrix& r, std::size_t t) {
  const auto row = r.row(t);
  std::vector<double> x(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) x[i] = 1.0 + row[i];
  return Vector(std::move(x));
}

PortfolioWeights srm_weights(const ReturnsMatrix& returns, std::size_t t,
                             const BacktestConfig& cfg) {
  try {
    const ReturnsMatrix window = returns.slice_rows(t - cfg.window, cfg.window);
    const SharpeModel model = build_sharpe_model(window.values, cfg.eps_hat);
    return srm_pga(model).weights;
  } catch (const Error& e) {
    throw Error(e.kind(), "period " + std::to_string(t + 1) + ": " + e.detail());
  }
}

// Fills weights[t] for t in [window, T) using the SRM solver; optimised
// periods are independent so they are split into contiguous chunks.
void solve_srm_periods(const ReturnsMatrix& returns, const BacktestConfig& cfg,
                       std::vector<std::optional<PortfolioWeights>>& weights) {
  const std::size_t first = cfg.window;
  const std::size_t last = returns.periods();
  const std::size_t count = last - first;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(cfg.threads, count));

  if (workers == 1) {
    for (std::size_t t = first; t < last; ++t) weights[t] = srm_weights(returns, t, cfg);
    return;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = first + w * chunk;
    const std::size_t end = std::min(last, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t t = begin; t < end; ++t) weights[t] = srm_weights(returns, t, cfg);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  // Report the failure of the earliest period, as the sequential path would.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

BacktestReport run_backtest(const ReturnsMatrix& returns, const BacktestConfig& cfg) {
  returns.validate();
  if (cfg.window < 2) throw Error(ErrorKind::InvalidParameter, "window must be >= 2");
  if (!(cfg.eps_hat > 0.0)) throw Error(ErrorKind::InvalidParameter, "eps_hat must be positive");
  const std::size_t periods = returns.periods();
  const std::size_t n = returns.assets();
  if (periods < cfg.window + 1) {
    throw Error(ErrorKind::InsufficientData,
                "backtest needs at least window + 1 = " + std::to_string(cfg.window + 1) +
                    " periods, has " + std::to_string(periods));
  }

  std::vector<std::optional<PortfolioWeights>> weights(periods);
  switch (cfg.strategy) {
    case Strategy::OneOverN:
      for (auto& w : weights) w = PortfolioWeights::equal(n);
      break;
    case Strategy::SrmPga:
      for (std::size_t t = 0; t < cfg.window; ++t) weights[t] = PortfolioWeights::equal(n);
      solve_srm_periods(returns, cfg, weights);
      break;
    case Strategy::Market: {
      Vector state = PortfolioWeights::equal(n).values();
      for (std::size_t t = 0; t < periods; ++t) {
        weights[t] = PortfolioWeights(state);
        state = market_strategy_step(state, price_relatives(returns.values, t));
      }
      break;
    }
  }

  BacktestReport report;
  report.realized_returns.reserve(periods);
  report.weights_history.reserve(periods);
  for (std::size_t t = 0; t < periods; ++t) {
    const PortfolioWeights& w = *weights[t];
    const double gross = dot(w.values(), price_relatives(returns.values, t));
    if (!(gross > 0.0)) {
      throw Error(ErrorKind::WealthWipeout,
                  "portfolio value fell to zero at period " + std::to_string(t + 1));
    }
    report.realized_returns.push_back(gross - 1.0);
    report.weights_history.push_back(w);
  }

  WealthCurve curve = compute_wealth(report.realized_returns);
  report.final_wealth = curve.final_wealth;
  report.wealth_path = std::move(curve.path);
  try {
    report.sharpe = compute_sharpe(report.realized_returns);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateSeries) throw;
  }
  return report;
}

}  // namespace fracopt
