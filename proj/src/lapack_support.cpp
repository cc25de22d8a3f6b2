#include "lapack_support.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace stiefel::la {
namespace {

[[noreturn]] void fail(const char* routine, int info) {
  throw std::runtime_error(std::string(routine) + " failed, info = " + std::to_string(info));
}

}  // namespace

void sym_eig(const Matrix& a, Matrix& v, std::vector<double>& w) {
  const int n = a.rows();
  v = a;
  w.assign(static_cast<size_t>(n), 0.0);
  if (n == 0) return;
  const int info =
      LAPACKE_dsyev(LAPACK_COL_MAJOR, 'V', 'L', n, v.data(), n, w.data());
  if (info != 0) fail("dsyev", info);
}

void svd(const Matrix& a, Matrix& u, std::vector<double>& s, Matrix& vt) {
  const int m = a.rows(), n = a.cols();
  u = Matrix(m, m);
  vt = Matrix(n, n);
  s.assign(static_cast<size_t>(std::min(m, n)), 0.0);
  if (m == 0 || n == 0) {
    u = Matrix::identity(m);
    vt = Matrix::identity(n);
    return;
  }
  Matrix work = a;
  std::vector<double> superb(static_cast<size_t>(std::max(1, std::min(m, n) - 1)));
  const int info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'A', 'A', m, n, work.data(), m,
                                  s.data(), u.data(), m, vt.data(), n, superb.data());
  if (info != 0) fail("dgesvd", info);
}

Matrix lu_solve(Matrix a, Matrix b) {
  const int n = a.rows();
  if (n == 0) return b;
  std::vector<lapack_int> ipiv(static_cast<size_t>(n));
  const int info = LAPACKE_dgesv(LAPACK_COL_MAJOR, n, b.cols(), a.data(), n,
                                 ipiv.data(), b.data(), n);
  if (info != 0) fail("dgesv", info);
  return b;
}

int det_sign(Matrix a) {
  const int n = a.rows();
  if (n == 0) return 1;
  std::vector<lapack_int> ipiv(static_cast<size_t>(n));
  const int info = LAPACKE_dgetrf(LAPACK_COL_MAJOR, n, n, a.data(), n, ipiv.data());
  if (info != 0) fail("dgetrf", info);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (ipiv[static_cast<size_t>(i)] != i + 1) sign = -sign;
    if (a(i, i) < 0) sign = -sign;
  }
  return sign;
}

}  // namespace stiefel::la
