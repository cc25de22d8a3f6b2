#include "stiefel/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "stiefel/kernels.hpp"

namespace stiefel {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.assign(static_cast<size_t>(rows_) * cols_, 0.0);
  int i = 0;
  for (const auto& r : rows) {
    assert(static_cast<int>(r.size()) == cols_);
    int j = 0;
    for (double v : r) (*this)(i, j++) = v;
    ++i;
  }
}

Matrix Matrix::identity(int n) { return eye(n, n); }

Matrix Matrix::eye(int rows, int cols) {
  Matrix m(rows, cols);
  const int d = std::min(rows, cols);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::block(int i0, int j0, int r, int c) const {
  assert(i0 >= 0 && j0 >= 0 && i0 + r <= rows_ && j0 + c <= cols_);
  Matrix out(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) out(i, j) = (*this)(i0 + i, j0 + j);
  return out;
}

void Matrix::set_block(int i0, int j0, const Matrix& b) {
  assert(i0 >= 0 && j0 >= 0 && i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_);
  for (int j = 0; j < b.cols(); ++j)
    for (int i = 0; i < b.rows(); ++i) (*this)(i0 + i, j0 + j) = b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  kernels::ops().axpy(data(), 1.0, rhs.data(), size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  kernels::ops().axpy(data(), -1.0, rhs.data(), size());
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  kernels::ops().scal(data(), s, size());
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(double s, Matrix m) { return m *= s; }

Matrix matmul(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  if (!c.empty() && a.cols() > 0)
    kernels::ops().gemm_nn(c.data(), a.data(), b.data(), a.rows(), b.cols(), a.cols());
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Matrix c(a.cols(), b.cols());
  if (!c.empty() && a.rows() > 0)
    kernels::ops().gemm_tn(c.data(), a.data(), b.data(), a.cols(), b.cols(), a.rows());
  return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.cols());
  Matrix c(a.rows(), b.rows());
  if (!c.empty() && a.cols() > 0)
    kernels::ops().gemm_nt(c.data(), a.data(), b.data(), a.rows(), b.rows(), a.cols());
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) t(j, i) = m(i, j);
  return t;
}

double frob_inner(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  return kernels::ops().dot(a.data(), b.data(), a.size());
}

double frob_norm(const Matrix& m) { return std::sqrt(frob_inner(m, m)); }

double max_abs(const Matrix& m) {
  double v = 0.0;
  for (size_t i = 0; i < m.size(); ++i) v = std::max(v, std::fabs(m.data()[i]));
  return v;
}

double orthogonality_defect(const Matrix& m) {
  Matrix g = matmul_tn(m, m);
  for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return frob_norm(g);
}

}  // namespace stiefel
