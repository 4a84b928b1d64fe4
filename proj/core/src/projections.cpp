#include "fracopt/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fracopt/error.hpp"

namespace fracopt {

Vector project_simplex(const Vector& x) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorKind::DimensionError, "project_simplex: empty vector");

  std::vector<double> sorted(x.begin(), x.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());

  // Largest j with sorted[j-1] - (prefix_j - 1)/j > 0; j = 1 always qualifies.
  double prefix = 0.0;
  double theta = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    prefix += sorted[j - 1];
    const double candidate = (prefix - 1.0) / static_cast<double>(j);
    if (sorted[j - 1] - candidate > 0.0) theta = candidate;
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(x[i] - theta, 0.0);
  return Vector(std::move(out));
}

Vector project_band(const Vector& x, double a0) {
  if (!(a0 > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "project_band: a0 must be positive");
  }
  if (x.size() != 2) {
    throw Error(ErrorKind::DimensionError,
                "project_band: expected 2 entries, got " + std::to_string(x.size()));
  }
  return Vector{x[0], std::clamp(x[1], -a0, a0)};
}

Vector SimplexProjection::project(const Vector& x) const { return project_simplex(x); }

bool SimplexProjection::contains(const Vector& x, double tol) const {
  if (x.empty()) return false;
  double sum = 0.0;
  for (double v : x) {
    if (v < -tol) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

BandProjection::BandProjection(double a0) : a0_(a0) {
  if (!(a0 > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "BandProjection: a0 must be positive");
  }
}

Vector BandProjection::project(const Vector& x) const { return project_band(x, a0_); }

bool BandProjection::contains(const Vector& x, double tol) const {
  return x.size() == 2 && std::abs(x[1]) <= a0_ + tol;
}

}  // namespace fracopt
