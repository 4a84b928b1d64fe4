/**
 * @file sim_problems.hpp
 * @brief Two small fractional programs with known global solutions.
 *
 * Sim1: min over the 2-simplex of p^T x / ||x||.
 * Sim2: min over the band |x_2| <= a0 of (x^T A x + a3) / (x^T B x + a6)
 *       with A = diag(a1, a2), B = diag(a4, a5), a1 a5 > a2 a4 and
 *       a3 a5 = a2 a6. Its global minimisers are exactly {x_1 = 0}.
 */

#pragma once

#include <array>
#include <random>

#include "fracopt/linalg.hpp"
#include "fracopt/problem.hpp"

namespace fracopt {

struct Sim1Params {
  Vector p;
};

struct Sim2Params {
  double a0 = 0.0;
  std::array<double, 6> a{};  ///< a1 .. a6

  double a1() const { return a[0]; }
  double a2() const { return a[1]; }
  double a3() const { return a[2]; }
  double a4() const { return a[3]; }
  double a5() const { return a[4]; }
  double a6() const { return a[5]; }
};

/// Throws InvalidParameter unless p has two entries with p1, p2, p1 + p2 and
/// p1 - p2 all nonzero.
void validate(const Sim1Params& params);

/// Throws InvalidParameter unless all parameters are positive,
/// a1 a5 > a2 a4, and a3 a5 = a2 a6 (to 1e-12 relative).
void validate(const Sim2Params& params);

/// f = p^T x, g = ||x||, simplex projection, step bound 1 / (4 ||p||).
/// g raises NumericalBreakdown for ||x|| < 1e-15.
FractionalProblem build_sim1(const Sim1Params& params);

/// Closed-form global minimiser over the 2-simplex.
Vector sim1_analytic_solution(const Sim1Params& params);

/// f = x^T A x + a3, g = x^T B x + a6, band projection, step bound
/// 1 / (2 max(a1, a2)).
FractionalProblem build_sim2(const Sim2Params& params);

/// |x_1| <= tol, |x_2| <= a0 + tol, and f/g within tol of a2/a5.
bool sim2_is_global(const Sim2Params& params, const Vector& x, double tol);

/// Closed-form gradient of f/g for Sim2.
Vector sim2_gradient_oracle(const Sim2Params& params, const Vector& x);

/// Reference instance: a0 = 100, a = (4, 2, 3, 3, 2, 3).
Sim2Params reference_sim2_params();

/// Draws a1, a2, a4, a5, a6 uniformly from [0.5, 5], rejects until
/// a1 a5 > a2 a4, then sets a3 = a2 a6 / a5. a0 is drawn from [1, 200].
Sim2Params random_sim2_params(std::mt19937_64& rng);

}  // namespace fracopt
