#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "fracopt/linalg.hpp"
#include "fracopt/projections.hpp"

namespace fracopt {

/// One instance of min_{x in Omega} f(x) / g(x).
///
/// The evaluators must be reentrant. g is required to be positive on Omega;
/// the solvers check this at every iterate rather than trusting it.
struct FractionalProblem {
  std::size_t dimension = 0;

  std::function<double(const Vector&)> eval_f;
  std::function<double(const Vector&)> eval_g;
  std::function<Vector(const Vector&)> grad_f;
  std::function<Vector(const Vector&)> grad_g;

  std::shared_ptr<const ProjectionOperator> projection;

  /// Supremum of admissible PGA step sizes, i.e. 1 / L of the gradient of
  /// the shifted numerator f - M g for a valid lower bound M of f/g.
  double step_bound = 0.0;

  /// Lipschitz constants of grad f and grad g on Omega. Only the Dinkelbach
  /// inner solver consumes these.
  double grad_f_lipschitz = 0.0;
  double grad_g_lipschitz = 0.0;

  double ratio(const Vector& x) const { return eval_f(x) / eval_g(x); }
};

/// Step size 0.99 * step_bound (or another fraction in (0, 1)).
double default_alpha(const FractionalProblem& problem, double fraction = 0.99);

}  // namespace fracopt
