#include "fracopt/sharpe.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "fracopt/error.hpp"
#include "fracopt/projections.hpp"

namespace fracopt {

void ReturnsMatrix::validate() const {
  if (values.rows() < 2) {
    throw Error(ErrorKind::InsufficientData, "returns matrix needs at least 2 periods, has " +
                                                 std::to_string(values.rows()));
  }
  if (values.cols() < 1) throw Error(ErrorKind::InsufficientData, "returns matrix has no assets");
  if (!asset_labels.empty() && asset_labels.size() != values.cols()) {
    throw Error(ErrorKind::DimensionError, "asset label count does not match columns");
  }
  if (!period_labels.empty() && period_labels.size() != values.rows()) {
    throw Error(ErrorKind::DimensionError, "period label count does not match rows");
  }
}

ReturnsMatrix ReturnsMatrix::slice_rows(std::size_t first, std::size_t count) const {
  if (first + count > values.rows()) {
    throw Error(ErrorKind::DimensionError, "row slice out of range");
  }
  const std::size_t n = values.cols();
  const auto all = values.values();
  std::vector<double> e(all.begin() + static_cast<std::ptrdiff_t>(first * n),
                        all.begin() + static_cast<std::ptrdiff_t>((first + count) * n));
  ReturnsMatrix out{Matrix(count, n, std::move(e)), asset_labels, {}};
  if (!period_labels.empty()) {
    out.period_labels.assign(period_labels.begin() + static_cast<std::ptrdiff_t>(first),
                             period_labels.begin() + static_cast<std::ptrdiff_t>(first + count));
  }
  return out;
}

PortfolioWeights::PortfolioWeights(Vector w) : w_(std::move(w)) {
  if (!SimplexProjection{}.contains(w_, 1e-10)) {
    throw Error(ErrorKind::InvalidParameter, "portfolio weights must be nonnegative and sum to 1");
  }
}

PortfolioWeights PortfolioWeights::equal(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DimensionError, "portfolio needs at least one asset");
  return PortfolioWeights(Vector::filled(n, 1.0 / static_cast<double>(n)));
}

double SharpeModel::ratio_lower_bound() const {
  return -norm2(p) * std::sqrt(static_cast<double>(assets()) / eps_hat);
}

SharpeModel build_sharpe_model(const Matrix& returns, double eps_hat) {
  if (!(eps_hat > 0.0) || !std::isfinite(eps_hat)) {
    throw Error(ErrorKind::InvalidParameter, "eps_hat must be positive");
  }
  const std::size_t t = returns.rows();
  const std::size_t n = returns.cols();
  if (t < 2) throw Error(ErrorKind::InsufficientData, "Sharpe model needs T >= 2");
  if (n < 1) throw Error(ErrorKind::InsufficientData, "Sharpe model needs N >= 1");

  std::vector<double> mean(n, 0.0);
  for (std::size_t r = 0; r < t; ++r) {
    const auto row = returns.row(r);
    for (std::size_t c = 0; c < n; ++c) mean[c] += row[c];
  }
  for (double& m : mean) m /= static_cast<double>(t);

  // Q^T Q is the sample covariance; accumulate it directly from centred rows.
  const double inv = 1.0 / static_cast<double>(t - 1);
  std::vector<double> cov(n * n, 0.0);
  std::vector<double> centred(n);
  for (std::size_t r = 0; r < t; ++r) {
    const auto row = returns.row(r);
    for (std::size_t c = 0; c < n; ++c) centred[c] = row[c] - mean[c];
    for (std::size_t i = 0; i < n; ++i) {
      if (centred[i] == 0.0) continue;
      for (std::size_t j = i; j < n; ++j) cov[i * n + j] += centred[i] * centred[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cov[i * n + j] *= inv;
      cov[j * n + i] = cov[i * n + j];
    }
    cov[i * n + i] += eps_hat;
  }

  SharpeModel model;
  model.p = Vector(std::move(mean));
  model.q_eps = Matrix(n, n, std::move(cov));
  model.eps_hat = eps_hat;
  model.lambda1 = dominant_eigenvalue(model.q_eps, kSharpeEigenTol);

  const double p_norm = norm2(model.p);
  if (p_norm == 0.0) {
    throw Error(ErrorKind::DegenerateModel, "all mean returns are zero; step bound undefined");
  }
  model.step_bound = eps_hat / (2.0 * static_cast<double>(n) * model.lambda1 * p_norm);
  return model;
}

SharpeModel build_sharpe_model(const ReturnsMatrix& returns, double eps_hat) {
  returns.validate();
  return build_sharpe_model(returns.values, eps_hat);
}

double sharpe_objective(const SharpeModel& model, const Vector& w) {
  return dot(model.p, w) / std::sqrt(dot(w, matvec(model.q_eps, w)));
}

double sharpe_objective(const SharpeModel& model, const PortfolioWeights& w) {
  return sharpe_objective(model, w.values());
}

FractionalProblem sharpe_problem(const SharpeModel& model) {
  const Vector p = model.p;
  const Vector neg_p = scale(-1.0, p);
  const Matrix q = model.q_eps;
  const std::size_t n = model.assets();

  FractionalProblem problem;
  problem.dimension = n;
  problem.eval_f = [p](const Vector& w) { return -dot(p, w); };
  problem.eval_g = [q](const Vector& w) { return std::sqrt(dot(w, matvec(q, w))); };
  problem.grad_f = [neg_p](const Vector&) { return neg_p; };
  problem.grad_g = [q](const Vector& w) {
    const Vector qw = matvec(q, w);
    return scale(1.0 / std::sqrt(dot(w, qw)), qw);
  };
  problem.projection = std::make_shared<SimplexProjection>();
  problem.step_bound = model.step_bound;
  problem.grad_f_lipschitz = 0.0;
  problem.grad_g_lipschitz =
      2.0 * model.lambda1 * std::sqrt(static_cast<double>(n) / model.eps_hat);
  return problem;
}

SrmResult srm_pga(const SharpeModel& model, const SrmOptions& options) {
  const FractionalProblem problem = sharpe_problem(model);
  const std::size_t n = model.assets();

  PgaConfig cfg;
  cfg.alpha = options.alpha ? *options.alpha : default_alpha(problem, options.alpha_fraction);
  cfg.tol = options.tol;
  cfg.max_iter = options.max_iter;
  cfg.record_trace = options.record_trace;

  const Vector start =
      options.start ? *options.start : Vector::filled(n, 1.0 / static_cast<double>(n));
  SolveResult solve = pga_solve(problem, start, cfg);

  const double pw = dot(model.p, solve.x_star);
  PortfolioWeights weights(solve.x_star);
  SrmResult result{std::move(weights), -solve.ratio, pw >= -1e-12, std::move(solve)};
  return result;
}

}  // namespace fracopt
