/**
 * @file dinkelbach.hpp
 * @brief Dinkelbach's parametric method, kept as a reference solver.
 *
 * Sign convention follows the maximisation form: c_k = -f(x^k)/g(x^k) and
 * F(c) = max_{x in Omega} { -f(x) - c g(x) }. Each outer step minimises the
 * convex function f + c_k g by projected gradient descent warm-started at
 * the current point, with fixed step 0.99 / (L_grad_f + c_k L_grad_g).
 *
 * Requires f(x0) <= 0 so that c_0 >= 0 and every subproblem stays convex.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "fracopt/pga.hpp"
#include "fracopt/problem.hpp"

namespace fracopt {

struct DinkelbachConfig {
  double outer_tol = 1e-10;    ///< threshold on |F(c_k)|
  std::size_t max_outer = 200;
  double inner_tol = 1e-12;    ///< relative-change threshold for the inner solve
  std::size_t max_inner = 1000000;
};

struct DinkelbachResult {
  /// ratio is f/g at the returned point, i.e. -c*.
  SolveResult solution;
  std::vector<double> parameters;         ///< c_0, c_1, ...
  std::vector<double> parametric_values;  ///< F(c_0), F(c_1), ... (nonnegative)
};

/// Throws InvalidStart when f(x0) > 0 and InnerSolverFailure when a
/// subproblem does not converge within max_inner iterations.
DinkelbachResult dinkelbach_solve(const FractionalProblem& problem, const Vector& x0,
                                  const DinkelbachConfig& cfg = {});

}  // namespace fracopt
