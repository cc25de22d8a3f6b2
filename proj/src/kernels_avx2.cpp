#include "stiefel/kernels.hpp"

// AVX2+FMA kernels, 4 doubles per vector with scalar tails. This file is
// compiled with -mavx2 -mfma and must only be reached after the runtime
// CPU check in kernels.cpp.

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace stiefel::kernels {
namespace {

void gemm_nn_avx2(double* c, const double* a, const double* b, int m, int n, int k) {
  const int m4 = m - (m % 4);
  for (int j = 0; j < n; ++j) {
    double* cj = c + static_cast<size_t>(j) * m;
    for (int i = 0; i < m4; i += 4) _mm256_storeu_pd(cj + i, _mm256_setzero_pd());
    for (int i = m4; i < m; ++i) cj[i] = 0.0;
    const double* bj = b + static_cast<size_t>(j) * k;
    for (int l = 0; l < k; ++l) {
      const __m256d bv = _mm256_set1_pd(bj[l]);
      const double* al = a + static_cast<size_t>(l) * m;
      for (int i = 0; i < m4; i += 4) {
        __m256d cv = _mm256_loadu_pd(cj + i);
        cv = _mm256_fmadd_pd(bv, _mm256_loadu_pd(al + i), cv);
        _mm256_storeu_pd(cj + i, cv);
      }
      const double bs = bj[l];
      for (int i = m4; i < m; ++i) cj[i] += bs * al[i];
    }
  }
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* x, const double* y, size_t n) {
  const size_t n4 = n - (n % 4);
  __m256d acc = _mm256_setzero_pd();
  for (size_t i = 0; i < n4; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (size_t i = n4; i < n; ++i) s += x[i] * y[i];
  return s;
}

void gemm_tn_avx2(double* c, const double* a, const double* b, int m, int n, int k) {
  for (int j = 0; j < n; ++j) {
    const double* bj = b + static_cast<size_t>(j) * k;
    double* cj = c + static_cast<size_t>(j) * m;
    for (int i = 0; i < m; ++i)
      cj[i] = dot_avx2(a + static_cast<size_t>(i) * k, bj, static_cast<size_t>(k));
  }
}

void gemm_nt_avx2(double* c, const double* a, const double* b, int m, int n, int k) {
  const int m4 = m - (m % 4);
  for (int j = 0; j < n; ++j) {
    double* cj = c + static_cast<size_t>(j) * m;
    for (int i = 0; i < m4; i += 4) _mm256_storeu_pd(cj + i, _mm256_setzero_pd());
    for (int i = m4; i < m; ++i) cj[i] = 0.0;
    for (int l = 0; l < k; ++l) {
      const double bjl = b[static_cast<size_t>(l) * n + j];
      const __m256d bv = _mm256_set1_pd(bjl);
      const double* al = a + static_cast<size_t>(l) * m;
      for (int i = 0; i < m4; i += 4) {
        __m256d cv = _mm256_loadu_pd(cj + i);
        cv = _mm256_fmadd_pd(bv, _mm256_loadu_pd(al + i), cv);
        _mm256_storeu_pd(cj + i, cv);
      }
      for (int i = m4; i < m; ++i) cj[i] += bjl * al[i];
    }
  }
}

void axpy_avx2(double* y, double alpha, const double* x, size_t n) {
  const size_t n4 = n - (n % 4);
  const __m256d av = _mm256_set1_pd(alpha);
  for (size_t i = 0; i < n4; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
    _mm256_storeu_pd(y + i, yv);
  }
  for (size_t i = n4; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double* x, double alpha, size_t n) {
  const size_t n4 = n - (n % 4);
  const __m256d av = _mm256_set1_pd(alpha);
  for (size_t i = 0; i < n4; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (size_t i = n4; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table{gemm_nn_avx2, gemm_tn_avx2, gemm_nt_avx2,
                         dot_avx2,     axpy_avx2,    scal_avx2};
  return table;
}

}  // namespace stiefel::kernels

#else  // non-x86 build: never selected, satisfy the linker

namespace stiefel::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace stiefel::kernels

#endif
