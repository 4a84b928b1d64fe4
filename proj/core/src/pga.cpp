#include "fracopt/pga.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fracopt/error.hpp"

namespace fracopt {

double default_alpha(const FractionalProblem& problem, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "step fraction must lie in (0, 1)");
  }
  if (!(problem.step_bound > 0.0) || !std::isfinite(problem.step_bound)) {
    throw Error(ErrorKind::InvalidParameter, "problem step bound must be positive and finite");
  }
  return fraction * problem.step_bound;
}

PgaConfig default_pga_config(const FractionalProblem& problem, double fraction) {
  PgaConfig cfg;
  cfg.alpha = default_alpha(problem, fraction);
  return cfg;
}

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterReached: return "MaxIterReached";
  }
  return "Unknown";
}

namespace {

void validate(const FractionalProblem& problem, const Vector& x0, const PgaConfig& cfg) {
  if (!problem.eval_f || !problem.eval_g || !problem.grad_f || !problem.grad_g ||
      !problem.projection) {
    throw Error(ErrorKind::InvalidParameter, "problem is missing an evaluator or projection");
  }
  if (x0.size() != problem.dimension) {
    throw Error(ErrorKind::DimensionError, "start point has " + std::to_string(x0.size()) +
                                               " entries, problem dimension is " +
                                               std::to_string(problem.dimension));
  }
  if (!(cfg.alpha > 0.0) || !(cfg.alpha < problem.step_bound)) {
    throw Error(ErrorKind::InvalidParameter,
                "alpha must lie in (0, " + std::to_string(problem.step_bound) + ")");
  }
  if (!(cfg.tol > 0.0)) throw Error(ErrorKind::InvalidParameter, "tol must be positive");
  if (cfg.max_iter < 1) throw Error(ErrorKind::InvalidParameter, "max_iter must be >= 1");
}

struct Evaluation {
  double f;
  double g;
};

Evaluation evaluate(const FractionalProblem& problem, const Vector& x) {
  const double f = problem.eval_f(x);
  const double g = problem.eval_g(x);
  if (!std::isfinite(f) || !std::isfinite(g)) {
    throw Error(ErrorKind::NumericalBreakdown, "objective evaluation is not finite");
  }
  if (!(g > 0.0)) {
    throw Error(ErrorKind::PositivityViolation,
                "denominator g(x) = " + std::to_string(g) + " is not positive");
  }
  return {f, g};
}

Vector checked_gradient(const std::function<Vector(const Vector&)>& grad, const Vector& x,
                        const char* which) {
  Vector v = grad(x);
  if (v.size() != x.size()) {
    throw Error(ErrorKind::DimensionError, std::string(which) + " has wrong dimension");
  }
  return v;
}

bool step_small(double step, double prev_norm, double tol) {
  return prev_norm > 0.0 ? step / prev_norm <= tol : step <= tol;
}

// Shared driver; `shift` is the lower bound M (0 for the M-free form).
// With shifted = false the update uses grad f and f/g directly.
SolveResult run(const FractionalProblem& problem, const Vector& x0, const PgaConfig& cfg,
                bool shifted, double shift) {
  validate(problem, x0, cfg);
  const double alpha = cfg.alpha;

  Vector x = problem.projection->project(x0);
  Evaluation e = evaluate(problem, x);

  auto reported_ratio = [&](const Evaluation& ev) {
    if (!shifted) return ev.f / ev.g;
    const double shifted_ratio = (ev.f - shift * ev.g) / ev.g;
    if (shifted_ratio < -1e-10) {
      throw Error(ErrorKind::ShiftViolation,
                  "shifted ratio " + std::to_string(shifted_ratio) + " is negative; M = " +
                      std::to_string(shift) + " is not a lower bound of f/g");
    }
    return shifted_ratio;
  };

  SolveResult result;
  if (cfg.record_trace) {
    result.trace.emplace();
    result.trace->iterates.push_back(x);
    result.trace->ratios.push_back(reported_ratio(e));
  } else {
    reported_ratio(e);
  }

  std::size_t k = 0;
  SolveStatus status = SolveStatus::MaxIterReached;
  while (k < cfg.max_iter) {
    const Vector gf = checked_gradient(problem.grad_f, x, "grad f");
    const Vector gg = checked_gradient(problem.grad_g, x, "grad g");

    Vector trial;
    if (shifted) {
      const Vector gf_shifted = axpy(-shift, gg, gf);
      const double c = (e.f - shift * e.g) / e.g;
      trial = axpy(alpha * c, gg, axpy(-alpha, gf_shifted, x));
    } else {
      const double c = e.f / e.g;
      trial = axpy(alpha * c, gg, axpy(-alpha, gf, x));
    }
    Vector next = problem.projection->project(trial);
    ++k;

    const double step = norm2(next - x);
    const double prev_norm = norm2(x);
    x = std::move(next);
    e = evaluate(problem, x);
    const double r = reported_ratio(e);

    if (result.trace) {
      result.trace->iterates.push_back(x);
      result.trace->ratios.push_back(r);
      result.trace->steps.push_back(step);
    }
    if (step_small(step, prev_norm, cfg.tol)) {
      status = SolveStatus::Converged;
      break;
    }
  }

  result.ratio = reported_ratio(e);
  result.iterations = k;
  result.status = status;
  result.fixed_point_residual = fixed_point_residual(problem, x, alpha);
  result.x_star = std::move(x);
  return result;
}

}  // namespace

SolveResult pga_solve(const FractionalProblem& problem, const Vector& x0, const PgaConfig& cfg) {
  return run(problem, x0, cfg, false, 0.0);
}

SolveResult pga_solve_shifted(const FractionalProblem& problem, double shift, const Vector& x0,
                              const PgaConfig& cfg) {
  if (!std::isfinite(shift)) {
    throw Error(ErrorKind::InvalidParameter, "shift must be finite");
  }
  return run(problem, x0, cfg, true, shift);
}

double fixed_point_residual(const FractionalProblem& problem, const Vector& x, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidParameter, "alpha must be positive");
  const Evaluation e = evaluate(problem, x);
  const Vector gf = checked_gradient(problem.grad_f, x, "grad f");
  const Vector gg = checked_gradient(problem.grad_g, x, "grad g");
  const Vector trial = axpy(alpha * (e.f / e.g), gg, axpy(-alpha, gf, x));
  return norm2(x - problem.projection->project(trial));
}

}  // namespace fracopt
