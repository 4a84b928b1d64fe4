/**
 * @file pga.hpp
 * @brief Proximal gradient algorithm for single-ratio fractional programs.
 *
 * Production iteration:
 *
 *   x^{k+1} = P_Omega( x^k - alpha * grad f(x^k)
 *                      + alpha * (f(x^k) / g(x^k)) * grad g(x^k) )
 *
 * The shifted variant runs the same recurrence written in terms of
 * f - M g; the two are algebraically identical and the shifted one exists
 * for cross-checks and for the nonnegative ratio diagnostics.
 *
 * Stopping: ||x^k - x^{k-1}|| / ||x^{k-1}|| <= tol, with an absolute test
 * when x^{k-1} = 0, or after max_iter updates.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fracopt/linalg.hpp"
#include "fracopt/problem.hpp"

namespace fracopt {

struct PgaConfig {
  double alpha = 0.0;
  double tol = 1e-5;
  std::size_t max_iter = 100000;
  bool record_trace = false;
};

/// Config with alpha = fraction * step_bound and the remaining fields default.
PgaConfig default_pga_config(const FractionalProblem& problem, double fraction = 0.99);

enum class SolveStatus { Converged, MaxIterReached };

const char* to_string(SolveStatus status) noexcept;

/// iterates[k] is x^k starting with the (projected) start point; ratios[k]
/// is the ratio at iterates[k]; steps[k] is ||x^{k+1} - x^k||.
struct SolveTrace {
  std::vector<Vector> iterates;
  std::vector<double> ratios;
  std::vector<double> steps;
};

struct SolveResult {
  Vector x_star;
  double ratio = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::MaxIterReached;
  double fixed_point_residual = 0.0;
  std::optional<SolveTrace> trace;
};

/// Runs the M-free iteration. An infeasible x0 is projected once first.
///
/// Throws InvalidParameter for an invalid config, PositivityViolation when
/// g(x^k) <= 0, and NumericalBreakdown on a non-finite evaluation.
SolveResult pga_solve(const FractionalProblem& problem, const Vector& x0, const PgaConfig& cfg);

/// Same iterate sequence computed through f - shift * g. Reported ratios
/// (result.ratio and trace ratios) are the shifted values c_k - shift.
/// Throws ShiftViolation when a shifted ratio drops below -1e-10.
SolveResult pga_solve_shifted(const FractionalProblem& problem, double shift, const Vector& x0,
                              const PgaConfig& cfg);

/// ||x - P(x - alpha grad f(x) + alpha (f(x)/g(x)) grad g(x))||, zero exactly
/// at fixed points of the iteration.
double fixed_point_residual(const FractionalProblem& problem, const Vector& x, double alpha);

}  // namespace fracopt
