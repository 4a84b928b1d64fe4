#include <gtest/gtest.h>

#include <cmath>

#include "fracopt/dinkelbach.hpp"
#include "fracopt/error.hpp"
#include "fracopt/sim_problems.hpp"

namespace fracopt {
namespace {

TEST(Dinkelbach, Sim1BReachesSqrtFive) {
  const auto problem = build_sim1({Vector{-2.0, -1.0}});
  const auto result = dinkelbach_solve(problem, Vector{0.5, 0.5});
  ASSERT_FALSE(result.parameters.empty());
  EXPECT_NEAR(result.parameters.back(), std::sqrt(5.0), 1e-8);
  EXPECT_NEAR(result.solution.ratio, -std::sqrt(5.0), 1e-8);
  EXPECT_NEAR(result.solution.x_star[0], 2.0 / 3.0, 1e-5);
  EXPECT_NEAR(result.solution.x_star[1], 1.0 / 3.0, 1e-5);
  EXPECT_EQ(result.solution.status, SolveStatus::Converged);
}

TEST(Dinkelbach, ParametersIncreaseAndResidualsShrink) {
  const auto problem = build_sim1({Vector{-2.0, -1.0}});
  const auto result = dinkelbach_solve(problem, Vector{1.0, 0.0});
  ASSERT_EQ(result.parameters.size(), result.parametric_values.size());
  for (std::size_t k = 0; k < result.parameters.size(); ++k) {
    EXPECT_GE(result.parametric_values[k], -1e-12);
    if (k > 0) {
      EXPECT_GE(result.parameters[k], result.parameters[k - 1] - 1e-12);
      EXPECT_LE(result.parametric_values[k], result.parametric_values[k - 1] + 1e-12);
    }
  }
}

TEST(Dinkelbach, StartAtOptimumStopsImmediately) {
  const auto problem = build_sim1({Vector{-2.0, -1.0}});
  const auto result = dinkelbach_solve(problem, Vector{2.0 / 3.0, 1.0 / 3.0});
  ASSERT_EQ(result.parameters.size(), 1u);
  EXPECT_NEAR(result.parametric_values.front(), 0.0, 1e-12);
  EXPECT_EQ(result.solution.iterations, 1u);
}

TEST(Dinkelbach, Sim1AFromVertex) {
  const auto problem = build_sim1({Vector{2.0, -1.0}});
  const auto result = dinkelbach_solve(problem, Vector{0.0, 1.0});
  EXPECT_NEAR(result.parameters.back(), 1.0, 1e-10);
  EXPECT_NEAR(result.solution.x_star[0], 0.0, 1e-10);
  EXPECT_NEAR(result.solution.x_star[1], 1.0, 1e-10);
}

TEST(Dinkelbach, AgreesWithPga) {
  const auto problem = build_sim1({Vector{-2.0, -1.0}});
  const auto dinkel = dinkelbach_solve(problem, Vector{0.5, 0.5});
  const auto pga = pga_solve(problem, Vector{0.5, 0.5}, default_pga_config(problem));
  EXPECT_NEAR(dinkel.solution.ratio, pga.ratio, 1e-5);
}

TEST(Dinkelbach, PositiveNumeratorStartIsRejected) {
  const auto problem = build_sim1({Vector{2.0, -1.0}});
  try {
    dinkelbach_solve(problem, Vector{0.5, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidStart);
  }
}

TEST(Dinkelbach, InnerBudgetExhaustion) {
  const auto problem = build_sim1({Vector{-2.0, -1.0}});
  DinkelbachConfig cfg;
  cfg.max_inner = 1;
  try {
    dinkelbach_solve(problem, Vector{1.0, 0.0}, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InnerSolverFailure);
  }
}

}  // namespace
}  // namespace fracopt
