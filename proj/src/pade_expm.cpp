#include "pade_expm.hpp"

#include <cmath>

#include "lapack_support.hpp"

namespace stiefel::detail {
namespace {

double norm_1(const Matrix& a) {
  double best = 0.0;
  for (int j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += std::fabs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Degree-13 Pade coefficients and the corresponding 1-norm threshold.
constexpr double kB[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                           1187353796428800.0,  129060195264000.0,   10559470521600.0,
                           670442572800.0,      33522128640.0,       1323241920.0,
                           40840800.0,          960960.0,            16380.0,
                           182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

Matrix pade_expm(const Matrix& a) {
  const int n = a.rows();
  if (n == 0) return Matrix(0, 0);

  int squarings = 0;
  Matrix x = a;
  const double nrm = norm_1(a);
  if (nrm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
    x *= std::ldexp(1.0, -squarings);
  }

  const Matrix ident = Matrix::identity(n);
  const Matrix x2 = matmul(x, x);
  const Matrix x4 = matmul(x2, x2);
  const Matrix x6 = matmul(x2, x4);

  Matrix u_inner = kB[13] * x6 + kB[11] * x4 + kB[9] * x2;
  Matrix u = matmul(x, matmul(x6, u_inner) + kB[7] * x6 + kB[5] * x4 + kB[3] * x2 + kB[1] * ident);
  Matrix v_inner = kB[12] * x6 + kB[10] * x4 + kB[8] * x2;
  Matrix v = matmul(x6, v_inner) + kB[6] * x6 + kB[4] * x4 + kB[2] * x2 + kB[0] * ident;

  // exp(x) ~= (V - U)^{-1} (V + U)
  Matrix r = la::lu_solve(v - u, v + u);
  for (int s = 0; s < squarings; ++s) r = matmul(r, r);
  return r;
}

}  // namespace stiefel::detail
