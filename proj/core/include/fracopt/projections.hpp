#pragma once

#include "fracopt/linalg.hpp"

namespace fracopt {

/// Euclidean projection onto a fixed closed convex set. For an indicator
/// function the proximity operator is exactly this projection, which is all
/// the proximal gradient iteration needs from the constraint set.
class ProjectionOperator {
 public:
  virtual ~ProjectionOperator() = default;

  virtual Vector project(const Vector& x) const = 0;

  /// Membership test with an absolute slack, used for feasibility checks.
  virtual bool contains(const Vector& x, double tol) const = 0;
};

/// Probability simplex {w >= 0, sum(w) = 1}.
class SimplexProjection final : public ProjectionOperator {
 public:
  Vector project(const Vector& x) const override;
  bool contains(const Vector& x, double tol) const override;
};

/// Horizontal band {x in R^2 : |x_2| <= a0}.
class BandProjection final : public ProjectionOperator {
 public:
  explicit BandProjection(double a0);

  double half_width() const noexcept { return a0_; }

  Vector project(const Vector& x) const override;
  bool contains(const Vector& x, double tol) const override;

 private:
  double a0_;
};

/// Sort-and-threshold projection onto the probability simplex.
/// Throws DimensionError on an empty input.
Vector project_simplex(const Vector& x);

/// Returns (x_1, clamp(x_2, -a0, a0)). Throws InvalidParameter for a0 <= 0
/// and DimensionError unless x has exactly two entries.
Vector project_band(const Vector& x, double a0);

}  // namespace fracopt
