#include "fracopt/sim_problems.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "fracopt/error.hpp"

namespace fracopt {

void validate(const Sim1Params& params) {
  if (params.p.size() != 2) {
    throw Error(ErrorKind::InvalidParameter, "Sim1 needs a two-component p");
  }
  const double p1 = params.p[0];
  const double p2 = params.p[1];
  if (p1 == 0.0 || p2 == 0.0 || p1 + p2 == 0.0 || p1 == p2) {
    throw Error(ErrorKind::InvalidParameter,
                "Sim1 requires p1 != 0, p2 != 0, p1 + p2 != 0 and p1 != p2");
  }
}

void validate(const Sim2Params& params) {
  if (!(params.a0 > 0.0)) throw Error(ErrorKind::InvalidParameter, "Sim2 needs a0 > 0");
  for (std::size_t i = 0; i < params.a.size(); ++i) {
    if (!(params.a[i] > 0.0) || !std::isfinite(params.a[i])) {
      throw Error(ErrorKind::InvalidParameter, "Sim2 parameter a" + std::to_string(i + 1) +
                                                   " must be positive");
    }
  }
  if (!(params.a1() * params.a5() > params.a2() * params.a4())) {
    throw Error(ErrorKind::InvalidParameter, "Sim2 requires a1*a5 > a2*a4");
  }
  const double lhs = params.a3() * params.a5();
  const double rhs = params.a2() * params.a6();
  if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs))) {
    throw Error(ErrorKind::InvalidParameter, "Sim2 requires a3*a5 == a2*a6");
  }
}

FractionalProblem build_sim1(const Sim1Params& params) {
  validate(params);
  const Vector p = params.p;

  auto safe_norm = [](const Vector& x) {
    const double n = norm2(x);
    if (n < 1e-15) {
      throw Error(ErrorKind::NumericalBreakdown, "Sim1 g is not differentiable at the origin");
    }
    return n;
  };

  FractionalProblem problem;
  problem.dimension = 2;
  problem.eval_f = [p](const Vector& x) { return dot(p, x); };
  problem.eval_g = safe_norm;
  problem.grad_f = [p](const Vector&) { return p; };
  problem.grad_g = [safe_norm](const Vector& x) { return scale(1.0 / safe_norm(x), x); };
  problem.projection = std::make_shared<SimplexProjection>();
  problem.step_bound = 1.0 / (4.0 * norm2(p));
  problem.grad_f_lipschitz = 0.0;
  // Sharpe-model bound 2 lambda1 sqrt(N / eps) with lambda1 = eps = 1, N = 2.
  problem.grad_g_lipschitz = 2.0 * std::sqrt(2.0);
  return problem;
}

Vector sim1_analytic_solution(const Sim1Params& params) {
  validate(params);
  const double p1 = params.p[0];
  const double p2 = params.p[1];
  if (p1 < 0.0 && p2 < 0.0) return Vector{p1 / (p1 + p2), p2 / (p1 + p2)};
  if (p1 > p2) return Vector{0.0, 1.0};
  return Vector{1.0, 0.0};
}

FractionalProblem build_sim2(const Sim2Params& params) {
  validate(params);
  const double a1 = params.a1(), a2 = params.a2(), a3 = params.a3();
  const double a4 = params.a4(), a5 = params.a5(), a6 = params.a6();

  FractionalProblem problem;
  problem.dimension = 2;
  problem.eval_f = [=](const Vector& x) { return a1 * x[0] * x[0] + a2 * x[1] * x[1] + a3; };
  problem.eval_g = [=](const Vector& x) { return a4 * x[0] * x[0] + a5 * x[1] * x[1] + a6; };
  problem.grad_f = [=](const Vector& x) { return Vector{2.0 * a1 * x[0], 2.0 * a2 * x[1]}; };
  problem.grad_g = [=](const Vector& x) { return Vector{2.0 * a4 * x[0], 2.0 * a5 * x[1]}; };
  problem.projection = std::make_shared<BandProjection>(params.a0);
  problem.step_bound = 1.0 / (2.0 * std::max(a1, a2));
  problem.grad_f_lipschitz = 2.0 * std::max(a1, a2);
  problem.grad_g_lipschitz = 2.0 * std::max(a4, a5);
  return problem;
}

bool sim2_is_global(const Sim2Params& params, const Vector& x, double tol) {
  if (x.size() != 2) return false;
  if (std::abs(x[0]) > tol || std::abs(x[1]) > params.a0 + tol) return false;
  const double f = params.a1() * x[0] * x[0] + params.a2() * x[1] * x[1] + params.a3();
  const double g = params.a4() * x[0] * x[0] + params.a5() * x[1] * x[1] + params.a6();
  return std::abs(f / g - params.a2() / params.a5()) <= tol;
}

Vector sim2_gradient_oracle(const Sim2Params& params, const Vector& x) {
  const double a1 = params.a1(), a2 = params.a2(), a3 = params.a3();
  const double a4 = params.a4(), a5 = params.a5(), a6 = params.a6();
  const double x1 = x[0], x2 = x[1];
  const double g = a4 * x1 * x1 + a5 * x2 * x2 + a6;
  const double factor = 2.0 / (g * g);
  return Vector{factor * x1 * ((a1 * a5 - a2 * a4) * x2 * x2 + (a1 * a6 - a3 * a4)),
                factor * x2 * ((a2 * a4 - a1 * a5) * x1 * x1 + (a2 * a6 - a3 * a5))};
}

Sim2Params reference_sim2_params() { return Sim2Params{100.0, {4.0, 2.0, 3.0, 3.0, 2.0, 3.0}}; }

Sim2Params random_sim2_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(0.5, 5.0);
  std::uniform_real_distribution<double> width(1.0, 200.0);
  Sim2Params params;
  params.a0 = width(rng);
  do {
    params.a[0] = coeff(rng);
    params.a[1] = coeff(rng);
    params.a[3] = coeff(rng);
    params.a[4] = coeff(rng);
  } while (!(params.a[0] * params.a[4] > params.a[1] * params.a[3]));
  params.a[5] = coeff(rng);
  params.a[2] = params.a[1] * params.a[5] / params.a[4];
  return params;
}

}  // namespace fracopt
