#include "stiefel/kernels.hpp"

// Reference kernels. Loop order matches the SIMD variants (column-panel
// saxpy for NN/NT, dot products for TN) so results differ only by FMA
// rounding.

namespace stiefel::kernels {
namespace {

void gemm_nn_scalar(double* c, const double* a, const double* b, int m, int n, int k) {
  for (int j = 0; j < n; ++j) {
    double* cj = c + static_cast<size_t>(j) * m;
    for (int i = 0; i < m; ++i) cj[i] = 0.0;
    const double* bj = b + static_cast<size_t>(j) * k;
    for (int l = 0; l < k; ++l) {
      const double blj = bj[l];
      const double* al = a + static_cast<size_t>(l) * m;
      for (int i = 0; i < m; ++i) cj[i] += blj * al[i];
    }
  }
}

void gemm_tn_scalar(double* c, const double* a, const double* b, int m, int n, int k) {
  for (int j = 0; j < n; ++j) {
    const double* bj = b + static_cast<size_t>(j) * k;
    double* cj = c + static_cast<size_t>(j) * m;
    for (int i = 0; i < m; ++i) {
      const double* ai = a + static_cast<size_t>(i) * k;
      double acc = 0.0;
      for (int l = 0; l < k; ++l) acc += ai[l] * bj[l];
      cj[i] = acc;
    }
  }
}

void gemm_nt_scalar(double* c, const double* a, const double* b, int m, int n, int k) {
  for (int j = 0; j < n; ++j) {
    double* cj = c + static_cast<size_t>(j) * m;
    for (int i = 0; i < m; ++i) cj[i] = 0.0;
    for (int l = 0; l < k; ++l) {
      const double bjl = b[static_cast<size_t>(l) * n + j];
      const double* al = a + static_cast<size_t>(l) * m;
      for (int i = 0; i < m; ++i) cj[i] += bjl * al[i];
    }
  }
}

double dot_scalar(const double* x, const double* y, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double* y, double alpha, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double* x, double alpha, size_t n) {
  for (size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{gemm_nn_scalar, gemm_tn_scalar, gemm_nt_scalar,
                         dot_scalar,     axpy_scalar,    scal_scalar};
  return table;
}

}  // namespace stiefel::kernels
