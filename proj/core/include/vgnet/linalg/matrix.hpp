#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace vgnet::linalg {

/// Dense row-major real matrix. Used for drifts, noise matrices, lagged
/// covariances and every other non-symmetric quantity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// Principal submatrix on the given index set (rows and columns).
  Matrix select(std::span<const std::size_t> idx) const;

  double max_abs() const noexcept;
  double trace() const;
  bool all_finite() const noexcept;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s) noexcept;

  std::vector<std::vector<double>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, Matrix a);
Matrix operator*(Matrix a, double s);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

double dot(std::span<const double> x, std::span<const double> y);

/// Induced 1-norm (max column sum).
double norm1(const Matrix& a);
/// Spectral norm, via the largest eigenvalue of aᵀa.
double norm2(const Matrix& a);

/// Solves a·x = b by LU with partial pivoting. Throws NumericalError if a
/// is numerically singular.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);

/// Real symmetric matrix. Construction from a general matrix checks
/// |m_ij − m_ji| ≤ 1e−12·max|m| and stores the exact symmetric part.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Matrix m);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  /// (m + mᵀ)/2 without a symmetry check; for results of computations that
  /// are symmetric up to rounding.
  static SymMatrix symmetrized(const Matrix& m);

  std::size_t dim() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }
  double max_abs() const noexcept { return m_.max_abs(); }
  SymMatrix select(std::span<const std::size_t> idx) const;

 private:
  Matrix m_;
};

inline constexpr double kSymmetryTolerance = 1e-12;

}  // namespace vgnet::linalg
