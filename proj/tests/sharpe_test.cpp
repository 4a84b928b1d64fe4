#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fracopt/error.hpp"
#include "fracopt/sharpe.hpp"
#include "fracopt/sim_problems.hpp"
#include "support/oracles.hpp"

namespace fracopt {
namespace {

Matrix random_returns(std::mt19937_64& rng, std::size_t t, std::size_t n) {
  std::normal_distribution<double> d(0.01, 0.05);
  std::vector<double> v(t * n);
  for (double& x : v) x = d(rng);
  return Matrix(t, n, v);
}

Matrix constant_rows(std::size_t t, const std::vector<double>& row) {
  std::vector<double> v;
  for (std::size_t i = 0; i < t; ++i) v.insert(v.end(), row.begin(), row.end());
  return Matrix(t, row.size(), v);
}

TEST(SharpeModel, ConstantColumns) {
  const auto model = build_sharpe_model(constant_rows(3, {0.1, 0.2}), 1e-4);
  EXPECT_NEAR(model.p[0], 0.1, 1e-15);
  EXPECT_NEAR(model.p[1], 0.2, 1e-15);
  EXPECT_NEAR(model.q_eps(0, 0), 1e-4, 1e-18);
  EXPECT_NEAR(model.q_eps(1, 1), 1e-4, 1e-18);
  EXPECT_NEAR(model.q_eps(0, 1), 0.0, 1e-18);
  EXPECT_NEAR(model.lambda1, 1e-4, 1e-12);
  EXPECT_NEAR(model.step_bound, 1e-4 / (2.0 * 2.0 * 1e-4 * std::sqrt(0.05)), 1e-9);
}

TEST(SharpeModel, TwoPeriodHandExample) {
  const Matrix r(2, 2, {0.1, 0.3, 0.3, 0.1});
  const auto model = build_sharpe_model(r, 0.01);
  EXPECT_NEAR(model.p[0], 0.2, 1e-15);
  EXPECT_NEAR(model.p[1], 0.2, 1e-15);
  EXPECT_NEAR(model.q_eps(0, 0), 0.03, 1e-15);
  EXPECT_NEAR(model.q_eps(0, 1), -0.02, 1e-15);
  EXPECT_NEAR(model.q_eps(1, 0), -0.02, 1e-15);
  EXPECT_NEAR(model.q_eps(1, 1), 0.03, 1e-15);
  EXPECT_NEAR(model.lambda1, 0.05, 1e-9);
  EXPECT_NEAR(sharpe_objective(model, PortfolioWeights::equal(2)), 0.2 / std::sqrt(0.005), 1e-9);
  EXPECT_NEAR(sharpe_objective(model, PortfolioWeights::equal(2)), 2.8284, 5e-5);
  EXPECT_NEAR(model.ratio_lower_bound(), -std::sqrt(0.08) * std::sqrt(2.0 / 0.01), 1e-12);
}

TEST(SharpeModel, Errors) {
  auto expect_kind = [](ErrorKind kind, const auto& fn) {
    try {
      fn();
      FAIL() << "expected " << to_string(kind);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind);
    }
  };
  expect_kind(ErrorKind::DegenerateModel,
              [] { build_sharpe_model(Matrix(2, 2, {0.1, -0.1, -0.1, 0.1}), 1e-4); });
  expect_kind(ErrorKind::InvalidParameter,
              [] { build_sharpe_model(constant_rows(3, {0.1, 0.2}), 0.0); });
  expect_kind(ErrorKind::InsufficientData,
              [] { build_sharpe_model(Matrix(1, 2, {0.1, 0.2}), 1e-4); });
  expect_kind(ErrorKind::InvalidParameter, [] { PortfolioWeights(Vector{0.5, 0.6}); });
  expect_kind(ErrorKind::InvalidParameter, [] { PortfolioWeights(Vector{1.5, -0.5}); });
}

TEST(SharpeModel, DenominatorLowerBoundOnSimplex) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const auto model = build_sharpe_model(random_returns(rng, 12, n), 1e-4);
    const auto problem = sharpe_problem(model);
    for (int s = 0; s < 50; ++s) {
      const Vector w = testing::random_simplex_point(rng, n);
      EXPECT_GE(problem.eval_g(w), std::sqrt(1e-4 / static_cast<double>(n)) * (1.0 - 1e-12));
    }
  }
}

TEST(SharpeObjective, ZeroCovarianceForm) {
  const auto model = build_sharpe_model(constant_rows(4, {0.03, 0.01, 0.02}), 1e-4);
  std::mt19937_64 rng(72);
  for (int s = 0; s < 20; ++s) {
    const Vector w = testing::random_simplex_point(rng, 3);
    EXPECT_NEAR(sharpe_objective(model, w), dot(model.p, w) / (std::sqrt(1e-4) * norm2(w)),
                1e-9);
  }
}

TEST(SharpeObjective, DegreeZeroHomogeneous) {
  std::mt19937_64 rng(73);
  const auto model = build_sharpe_model(random_returns(rng, 30, 6), 1e-4);
  for (int s = 0; s < 20; ++s) {
    const Vector w = testing::random_simplex_point(rng, 6);
    const double base = sharpe_objective(model, w);
    for (double lambda : {0.5, 2.0, 10.0}) {
      EXPECT_NEAR(sharpe_objective(model, scale(lambda, w)), base, 1e-12 * std::abs(base) + 1e-14);
    }
  }
}

TEST(SharpeProblem, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const auto model = build_sharpe_model(random_returns(rng, 20, n), 1e-4);
    const auto problem = sharpe_problem(model);
    const Vector w = testing::random_simplex_point(rng, n);
    EXPECT_LE(testing::relative_error(testing::finite_difference_gradient(problem.eval_g, w),
                                      problem.grad_g(w)),
              1e-5);
    EXPECT_LE(testing::relative_error(testing::finite_difference_gradient(problem.eval_f, w),
                                      problem.grad_f(w)),
              1e-5);
  }
}

TEST(SharpeProblem, GradientLipschitzBound) {
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 12;
    const auto model = build_sharpe_model(random_returns(rng, 15, n), 1e-4);
    const auto problem = sharpe_problem(model);
    const double bound = 2.0 * model.lambda1 * std::sqrt(static_cast<double>(n) / 1e-4);
    EXPECT_DOUBLE_EQ(problem.grad_g_lipschitz, bound);
    for (int s = 0; s < 50; ++s) {
      const Vector x = testing::random_simplex_point(rng, n);
      const Vector y = testing::random_simplex_point(rng, n);
      EXPECT_LE(norm2(problem.grad_g(x) - problem.grad_g(y)), bound * norm2(x - y) * (1 + 1e-12));
    }
  }
}

TEST(SrmPga, ZeroCovarianceReducesToSim1A) {
  // Minimising f = -p^T w with p = -(2, -1) s gives the Sim1-A ratio scaled by s.
  for (double s : {0.01, 1.0, 3.0}) {
    const auto model = build_sharpe_model(constant_rows(5, {-2.0 * s, 1.0 * s}), 1.0);
    SrmOptions options;
    options.record_trace = true;
    const auto result = srm_pga(model, options);
    EXPECT_NEAR(result.weights[0], 0.0, 1e-9);
    EXPECT_NEAR(result.weights[1], 1.0, 1e-9);
    EXPECT_TRUE(result.global_certificate);
    EXPECT_NEAR(result.sharpe, s, 1e-9);

    const auto sim1 = build_sim1({Vector{2.0, -1.0}});
    const auto reference = pga_solve(sim1, Vector{0.5, 0.5}, [&] {
      PgaConfig cfg = default_pga_config(sim1);
      cfg.record_trace = true;
      return cfg;
    }());
    ASSERT_EQ(result.solve.trace->iterates.size(), reference.trace->iterates.size());
    for (std::size_t k = 0; k < reference.trace->iterates.size(); ++k) {
      EXPECT_NEAR(result.solve.trace->iterates[k][0], reference.trace->iterates[k][0], 1e-12);
    }
  }
}

TEST(SrmPga, IdenticalMeansStartIsFixedPoint) {
  const auto model = build_sharpe_model(constant_rows(4, {0.02, 0.02, 0.02, 0.02}), 1e-4);
  const auto result = srm_pga(model);
  EXPECT_EQ(result.solve.iterations, 1u);
  EXPECT_LE(result.solve.fixed_point_residual, 1e-5);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(result.weights[i], 0.25, 1e-15);
}

TEST(SrmPga, SingleAsset) {
  const auto model = build_sharpe_model(Matrix(3, 1, {0.01, 0.02, 0.03}), 1e-4);
  const auto result = srm_pga(model);
  ASSERT_EQ(result.weights.size(), 1u);
  EXPECT_EQ(result.weights[0], 1.0);
  EXPECT_EQ(result.solve.status, SolveStatus::Converged);
}

TEST(SrmPga, RandomModelsKeepInvariants) {
  std::mt19937_64 rng(76);
  std::uniform_int_distribution<std::size_t> periods(3, 60);
  std::uniform_int_distribution<std::size_t> assets(2, 25);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t t = periods(rng);
    const std::size_t n = assets(rng);
    const auto model = build_sharpe_model(random_returns(rng, t, n), 1e-3);
    SrmOptions options;
    options.record_trace = true;
    options.max_iter = 20000;
    const auto result = srm_pga(model, options);
    double sum = 0.0;
    for (double w : result.weights.values()) {
      EXPECT_GE(w, 0.0);
      sum += w;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    const auto& ratios = result.solve.trace->ratios;
    for (std::size_t k = 1; k < ratios.size(); ++k) ASSERT_LE(ratios[k], ratios[k - 1] + 1e-12);
    if (result.sharpe >= 0.0) EXPECT_TRUE(result.global_certificate);
    EXPECT_GE(result.sharpe, sharpe_objective(model, PortfolioWeights::equal(n)) - 1e-12);
  }
}

TEST(ReturnsMatrixType, ValidateAndSlice) {
  ReturnsMatrix r{Matrix(3, 2, {1, 2, 3, 4, 5, 6}), {"A", "B"}, {"t1", "t2", "t3"}};
  EXPECT_NO_THROW(r.validate());
  const auto s = r.slice_rows(1, 2);
  EXPECT_EQ(s.periods(), 2u);
  EXPECT_EQ(s.values(0, 0), 3.0);
  EXPECT_EQ(s.period_labels, (std::vector<std::string>{"t2", "t3"}));
  r.asset_labels.pop_back();
  EXPECT_THROW(r.validate(), Error);
}

}  // namespace
}  // namespace fracopt
