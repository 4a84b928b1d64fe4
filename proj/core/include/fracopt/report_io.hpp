#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fracopt/backtest.hpp"
#include "fracopt/pga.hpp"
#include "fracopt/sharpe.hpp"

namespace fracopt {

/// JSON object with keys strategy, window, eps, unit, sharpe (null when the
/// series has zero variance), final_wealth, periods, assets.
void write_backtest_json(std::ostream& out, const BacktestReport& report,
                         const BacktestConfig& cfg, const std::vector<std::string>& asset_labels);

/// One row per period: period, label, return, wealth, then one weight
/// column per asset. Full round-trip precision.
void write_backtest_csv(std::ostream& out, const BacktestReport& report,
                        const ReturnsMatrix& returns);

/// JSON summary of a Sharpe solve: weights keyed by asset label, sharpe,
/// global_certificate, iterations, status, eps, lambda1, alpha.
void write_sharpe_json(std::ostream& out, const SrmResult& result, const SharpeModel& model,
                       double alpha, const std::vector<std::string>& asset_labels);

/// Columns k, x1..xN (named by `coordinate_prefix`), objective.
void write_trace_csv(std::ostream& out, const SolveTrace& trace,
                     const std::string& coordinate_prefix = "x");

}  // namespace fracopt
