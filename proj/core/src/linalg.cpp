#include "fracopt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fracopt/error.hpp"

namespace fracopt {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::NumericalBreakdown,
                  std::string(what) + " entry " + std::to_string(i) + " is not finite");
    }
  }
}

void require_same_size(const Vector& u, const Vector& v, const char* op) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::DimensionError, std::string(op) + ": sizes " + std::to_string(u.size()) +
                                               " and " + std::to_string(v.size()) + " differ");
  }
}

}  // namespace

Vector::Vector(std::vector<double> entries) : data_(std::move(entries)) {
  require_finite(data_, "vector");
}

Vector::Vector(std::initializer_list<double> entries) : data_(entries) {
  require_finite(data_, "vector");
}

Vector Vector::zeros(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }

Vector Vector::filled(std::size_t n, double value) {
  return Vector(std::vector<double>(n, value));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ * cols_ != data_.size()) {
    throw Error(ErrorKind::DimensionError,
                "matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                    std::to_string(data_.size()) + " entries");
  }
  require_finite(data_, "matrix");
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return Matrix(n, n, std::move(e));
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  const std::size_t n = diag.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Matrix(n, n, std::move(e));
}

Matrix Matrix::transpose() const {
  std::vector<double> t(data_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = data_[r * cols_ + c];
  }
  return Matrix(cols_, rows_, std::move(t));
}

bool Matrix::is_symmetric(double rel_tol) const {
  if (!is_square()) return false;
  double scale = 0.0;
  for (double x : data_) scale = std::max(scale, std::abs(x));
  const double limit = rel_tol * scale;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - (*this)(c, r)) > limit) return false;
    }
  }
  return true;
}

double dot(const Vector& u, const Vector& v) {
  require_same_size(u, v, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

Vector axpy(double a, const Vector& x, const Vector& y) {
  require_same_size(x, y, "axpy");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + y[i];
  return Vector(std::move(out));
}

Vector scale(double a, const Vector& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
  return Vector(std::move(out));
}

Vector matvec(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::DimensionError, "matvec: matrix has " + std::to_string(m.cols()) +
                                               " columns, vector has " +
                                               std::to_string(v.size()) + " entries");
  }
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return Vector(std::move(out));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionError, "matmul: inner dimensions " +
                                               std::to_string(a.cols()) + " and " +
                                               std::to_string(b.rows()) + " differ");
  }
  std::vector<double> out(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(out));
}

Matrix add_scaled_identity(const Matrix& m, double shift) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionError, "add_scaled_identity: matrix is not square");
  }
  std::vector<double> e(m.values().begin(), m.values().end());
  for (std::size_t i = 0; i < m.rows(); ++i) e[i * m.cols() + i] += shift;
  return Matrix(m.rows(), m.cols(), std::move(e));
}

Vector operator+(const Vector& u, const Vector& v) { return axpy(1.0, u, v); }
Vector operator-(const Vector& u, const Vector& v) { return axpy(-1.0, v, u); }
Vector operator*(double a, const Vector& v) { return scale(a, v); }

double dominant_eigenvalue(const Matrix& m, double tol, std::size_t max_iter) {
  if (!m.is_square()) {
    throw Error(ErrorKind::InvalidMatrix, "dominant_eigenvalue: matrix is not square");
  }
  if (!m.is_symmetric(1e-10)) {
    throw Error(ErrorKind::InvalidMatrix, "dominant_eigenvalue: matrix is not symmetric");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "dominant_eigenvalue: tol must be positive");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 0.0;

  // Golden-angle cosine start: deterministic and not orthogonal to the
  // structured eigenvectors (1,1,..), (1,-1,0,..) that the all-ones start misses.
  std::vector<double> start(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = 1.0 + 0.5 * std::cos(2.399963229728653 * static_cast<double>(i));
  }
  Vector v(std::move(start));
  v = scale(1.0 / norm2(v), v);

  Vector mv = matvec(m, v);
  double rayleigh = dot(v, mv);
  for (std::size_t it = 0; it < max_iter; ++it) {
    const double len = norm2(mv);
    if (len == 0.0) return 0.0;
    v = scale(1.0 / len, mv);
    mv = matvec(m, v);
    const double next = dot(v, mv);
    if (std::abs(next - rayleigh) <= tol * std::abs(next)) return next;
    rayleigh = next;
  }
  throw Error(ErrorKind::NoConvergence, "dominant_eigenvalue: no convergence after " +
                                            std::to_string(max_iter) + " iterations");
}

}  // namespace fracopt
