/**
 * @file linalg.hpp
 * @brief Minimal dense vector/matrix arithmetic for the fractional solvers.
 *
 * Everything here is double precision and row-major. Both types reject
 * non-finite entries at construction, so a NaN produced by a user callback
 * surfaces as ErrorKind::NumericalBreakdown at the point it is wrapped.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fracopt {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  static Vector zeros(std::size_t n);
  static Vector filled(std::size_t n, double value);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator[](std::size_t i) const { return data_[i]; }

  std::span<const double> values() const noexcept { return data_; }
  const std::vector<double>& raw() const noexcept { return data_; }

  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

class Matrix {
 public:
  Matrix() = default;
  /// Row-major entries; rows * cols must equal entries.size().
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }
  std::span<const double> values() const noexcept { return data_; }

  Matrix transpose() const;

  /// True when |m_ij - m_ji| <= rel_tol * max|m| for all i, j.
  bool is_symmetric(double rel_tol = 1e-10) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(const Vector& u, const Vector& v);
double norm2(const Vector& v);

/// a * x + y
Vector axpy(double a, const Vector& x, const Vector& y);
Vector scale(double a, const Vector& x);
Vector matvec(const Matrix& m, const Vector& v);
Matrix matmul(const Matrix& a, const Matrix& b);
/// Returns m + shift * I for square m.
Matrix add_scaled_identity(const Matrix& m, double shift);

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double a, const Vector& v);

/// Largest eigenvalue of a symmetric positive semidefinite matrix by power
/// iteration from a fixed deterministic start. Stops when the Rayleigh
/// quotient changes by at most tol relative to its magnitude.
///
/// Throws InvalidMatrix for non-square or asymmetric input and NoConvergence
/// when max_iter iterations do not meet the tolerance. The zero matrix
/// returns 0.
double dominant_eigenvalue(const Matrix& m, double tol = 1e-10, std::size_t max_iter = 100000);

}  // namespace fracopt
