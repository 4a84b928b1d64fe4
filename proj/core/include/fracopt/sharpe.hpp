/**
 * @file sharpe.hpp
 * @brief Regularised Sharpe ratio maximisation over the long-only simplex.
 *
 * Given a T x N matrix R of simple returns,
 *
 *   p     = (1/T) R^T 1_T                         (mean returns)
 *   Q     = (R - (1/T) 1_{TxT} R) / sqrt(T - 1)   (demeaned, scaled)
 *   Q_eps = Q^T Q + eps I
 *   S(w)  = p^T w / sqrt(w^T Q_eps w)
 *
 * Maximising S over the simplex is solved as min f/g with f = -p^T w and
 * g = sqrt(w^T Q_eps w), using the proximal gradient iteration with
 * alpha = 0.99 eps / (2 N lambda1 ||p||), where lambda1 is the largest
 * eigenvalue of Q_eps.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fracopt/linalg.hpp"
#include "fracopt/pga.hpp"
#include "fracopt/problem.hpp"

namespace fracopt {

/// T periods (rows) by N assets (columns) of decimal simple returns.
struct ReturnsMatrix {
  Matrix values;
  std::vector<std::string> asset_labels;
  std::vector<std::string> period_labels;  ///< empty when the source had none

  std::size_t periods() const noexcept { return values.rows(); }
  std::size_t assets() const noexcept { return values.cols(); }

  /// Throws InsufficientData for T < 2 or N < 1 and DimensionError for a
  /// label count that does not match.
  void validate() const;

  /// Rows [first, first + count) with matching period labels.
  ReturnsMatrix slice_rows(std::size_t first, std::size_t count) const;
};

/// Long-only, fully invested weights: w >= 0 and sum(w) = 1 to 1e-10.
class PortfolioWeights {
 public:
  /// Throws InvalidParameter when w is not on the simplex.
  explicit PortfolioWeights(Vector w);

  static PortfolioWeights equal(std::size_t n);

  const Vector& values() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

  friend bool operator==(const PortfolioWeights&, const PortfolioWeights&) = default;

 private:
  Vector w_;
};

struct SharpeModel {
  Vector p;
  Matrix q_eps;
  double eps_hat = 0.0;
  double lambda1 = 0.0;
  double step_bound = 0.0;

  std::size_t assets() const noexcept { return p.size(); }

  /// M = -||p|| sqrt(N / eps), a lower bound of f/g on the simplex.
  double ratio_lower_bound() const;
};

/// Tolerance used for lambda1 in build_sharpe_model.
inline constexpr double kSharpeEigenTol = 1e-8;

/// Throws InvalidParameter for eps_hat <= 0, InsufficientData for T < 2 and
/// DegenerateModel when ||p|| = 0.
SharpeModel build_sharpe_model(const Matrix& returns, double eps_hat);
SharpeModel build_sharpe_model(const ReturnsMatrix& returns, double eps_hat);

/// S(w) = p^T w / sqrt(w^T Q_eps w). Accepts any nonzero w.
double sharpe_objective(const SharpeModel& model, const Vector& w);
double sharpe_objective(const SharpeModel& model, const PortfolioWeights& w);

/// Fractional form f = -p^T w, g = sqrt(w^T Q_eps w) over the simplex;
/// grad g = Q_eps w / g(w).
FractionalProblem sharpe_problem(const SharpeModel& model);

struct SrmOptions {
  double alpha_fraction = 0.99;
  std::optional<double> alpha;  ///< overrides alpha_fraction when set
  double tol = 1e-5;
  std::size_t max_iter = 100000;
  bool record_trace = false;
  std::optional<Vector> start;  ///< defaults to (1/N) 1_N
};

struct SrmResult {
  PortfolioWeights weights;
  double sharpe = 0.0;              ///< S(w*) = -ratio
  bool global_certificate = false;  ///< p^T w* >= -1e-12
  SolveResult solve;
};

SrmResult srm_pga(const SharpeModel& model, const SrmOptions& options = {});

}  // namespace fracopt
