/**
 * @file backtest.hpp
 * @brief Moving-window portfolio backtest.
 *
 * Period t (0-based) is traded with weights chosen from the `window` rows
 * immediately before it. The first `window` periods lack a full history and
 * trade the equally weighted portfolio. The realised return of a period is
 * sum_i w_i (1 + r_i) - 1.
 *
 * Strategies:
 *  - SrmPga:   Sharpe maximisation on the trailing window.
 *  - OneOverN: rebalance to 1/N every period.
 *  - Market:   buy and hold from 1/N; holdings drift with prices.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fracopt/linalg.hpp"
#include "fracopt/returns_csv.hpp"
#include "fracopt/sharpe.hpp"

namespace fracopt {

enum class Strategy { SrmPga, OneOverN, Market };

std::string_view to_string(Strategy strategy) noexcept;
/// Accepts "srm-pga", "one-over-n", "market".
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;
std::string_view to_string(ReturnsUnit unit) noexcept;

struct BacktestConfig {
  std::size_t window = 20;
  Strategy strategy = Strategy::SrmPga;
  double eps_hat = 1e-4;
  ReturnsUnit returns_unit = ReturnsUnit::Decimal;  ///< echoed in reports only
  /// Worker threads for window-independent strategies; the report does not
  /// depend on this value.
  unsigned threads = 1;
};

struct BacktestReport {
  std::vector<double> realized_returns;
  /// Sample Sharpe of realized_returns; empty when the series has zero
  /// variance.
  std::optional<double> sharpe;
  double final_wealth = 1.0;
  std::vector<double> wealth_path;  ///< wealth after each period, W0 = 1 excluded
  std::vector<PortfolioWeights> weights_history;

  friend bool operator==(const BacktestReport&, const BacktestReport&) = default;
};

/// mean / sample std (T - 1 denominator), risk-free rate 0.
/// Throws InsufficientData for fewer than 2 values and DegenerateSeries for
/// zero variance.
double compute_sharpe(std::span<const double> returns);

struct WealthCurve {
  double final_wealth = 1.0;
  std::vector<double> path;
};

/// Running product of (1 + r) from W0 = 1. Throws WealthWipeout when any
/// return is <= -1.
WealthCurve compute_wealth(std::span<const double> returns);

/// Buy-and-hold drift: (state .* x) / sum(state .* x) for price relatives x.
Vector market_strategy_step(const Vector& state, const Vector& price_relatives);

/// Throws InsufficientData unless periods >= window + 1; solver failures are
/// re-raised with the period index in the message.
BacktestReport run_backtest(const ReturnsMatrix& returns, const BacktestConfig& cfg);

}  // namespace fracopt
