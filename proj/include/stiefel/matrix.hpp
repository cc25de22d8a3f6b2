#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

namespace stiefel {

/// Dense real matrix, column-major storage. Rows or columns may be zero;
/// all dimensions here are small (a few hundred at most), so no blocking
/// or sparsity is attempted.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {
    assert(rows >= 0 && cols >= 0);
  }

  /// Row-major brace initialization, for literals in tests and witnesses:
  /// Matrix({{1,2},{3,4}}).
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);
  /// The n-by-p matrix whose top p-by-p block is the identity.
  static Matrix eye(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(j) * rows_ + i];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(j) * rows_ + i];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* col(int j) { return data_.data() + static_cast<size_t>(j) * rows_; }
  const double* col(int j) const { return data_.data() + static_cast<size_t>(j) * rows_; }
  size_t size() const { return data_.size(); }

  Matrix block(int i0, int j0, int r, int c) const;
  void set_block(int i0, int j0, const Matrix& b);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(double s, Matrix m);

/// C = A * B. Shapes checked with assert; these are internal hot paths.
Matrix matmul(const Matrix& a, const Matrix& b);
/// C = A^T * B.
Matrix matmul_tn(const Matrix& a, const Matrix& b);
/// C = A * B^T.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

/// Frobenius inner product trace(A^T B).
double frob_inner(const Matrix& a, const Matrix& b);
double frob_norm(const Matrix& m);
double max_abs(const Matrix& m);

/// Frobenius distance to the identity of M^T M; zero for orthonormal columns.
double orthogonality_defect(const Matrix& m);

}  // namespace stiefel
