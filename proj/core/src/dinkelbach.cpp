#include "fracopt/dinkelbach.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fracopt/error.hpp"

namespace fracopt {

namespace {

void validate(const FractionalProblem& problem, const Vector& x0, const DinkelbachConfig& cfg) {
  if (!problem.eval_f || !problem.eval_g || !problem.grad_f || !problem.grad_g ||
      !problem.projection) {
    throw Error(ErrorKind::InvalidParameter, "problem is missing an evaluator or projection");
  }
  if (x0.size() != problem.dimension) {
    throw Error(ErrorKind::DimensionError, "start point dimension does not match problem");
  }
  if (!(cfg.outer_tol > 0.0) || !(cfg.inner_tol > 0.0) || cfg.max_outer < 1 ||
      cfg.max_inner < 1) {
    throw Error(ErrorKind::InvalidParameter, "Dinkelbach tolerances and limits must be positive");
  }
  if (problem.grad_f_lipschitz < 0.0 || problem.grad_g_lipschitz < 0.0 ||
      !(problem.grad_f_lipschitz + problem.grad_g_lipschitz > 0.0)) {
    throw Error(ErrorKind::InvalidParameter,
                "Dinkelbach needs gradient Lipschitz constants in the problem metadata");
  }
}

double checked_g(const FractionalProblem& problem, const Vector& x) {
  const double g = problem.eval_g(x);
  if (!std::isfinite(g)) throw Error(ErrorKind::NumericalBreakdown, "g(x) is not finite");
  if (!(g > 0.0)) throw Error(ErrorKind::PositivityViolation, "g(x) is not positive");
  return g;
}

// Projected gradient descent on f + c g starting from `start`.
Vector minimise_parametric(const FractionalProblem& problem, double c, const Vector& start,
                           const DinkelbachConfig& cfg) {
  double lipschitz = problem.grad_f_lipschitz + c * problem.grad_g_lipschitz;
  // c = 0 with an affine f leaves a linear objective; any finite step works.
  if (!(lipschitz > 0.0)) lipschitz = problem.grad_g_lipschitz;
  const double step = 0.99 / lipschitz;
  Vector x = start;
  for (std::size_t it = 0; it < cfg.max_inner; ++it) {
    const Vector grad = axpy(c, problem.grad_g(x), problem.grad_f(x));
    Vector next = problem.projection->project(axpy(-step, grad, x));
    const double change = norm2(next - x);
    const double base = norm2(x);
    x = std::move(next);
    if (base > 0.0 ? change / base <= cfg.inner_tol : change <= cfg.inner_tol) return x;
  }
  throw Error(ErrorKind::InnerSolverFailure,
              "parametric subproblem did not converge in " + std::to_string(cfg.max_inner) +
                  " iterations (c = " + std::to_string(c) + ")");
}

}  // namespace

DinkelbachResult dinkelbach_solve(const FractionalProblem& problem, const Vector& x0,
                                  const DinkelbachConfig& cfg) {
  validate(problem, x0, cfg);

  Vector x = problem.projection->project(x0);
  const double f0 = problem.eval_f(x);
  if (f0 > 0.0) {
    throw Error(ErrorKind::InvalidStart,
                "f(x0) = " + std::to_string(f0) + " > 0; Dinkelbach needs c_0 >= 0");
  }
  double c = -f0 / checked_g(problem, x);

  DinkelbachResult out;
  SolveStatus status = SolveStatus::MaxIterReached;
  std::size_t outer = 0;
  while (outer < cfg.max_outer) {
    ++outer;
    x = minimise_parametric(problem, c, x, cfg);
    const double f = problem.eval_f(x);
    const double g = checked_g(problem, x);
    const double value = -(f + c * g);
    out.parameters.push_back(c);
    out.parametric_values.push_back(value);
    if (std::abs(value) <= cfg.outer_tol) {
      status = SolveStatus::Converged;
      break;
    }
    c = -f / g;
  }

  SolveResult& s = out.solution;
  s.ratio = problem.ratio(x);
  s.iterations = outer;
  s.status = status;
  s.fixed_point_residual =
      problem.step_bound > 0.0 ? fixed_point_residual(problem, x, default_alpha(problem)) : 0.0;
  s.x_star = std::move(x);
  return out;
}

}  // namespace fracopt
