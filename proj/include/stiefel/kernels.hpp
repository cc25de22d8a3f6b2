#pragma once

#include <cstddef>

// Dense arithmetic kernels behind the Matrix free functions. Each kernel has
// a scalar reference implementation and an AVX2+FMA variant; the active set
// is chosen once at runtime from CPU capabilities, overridable through the
// STIEFEL_ISA environment variable ("scalar", "avx2", "auto") or set_isa().
// All buffers are contiguous column-major with leading dimension = row count.

namespace stiefel::kernels {

enum class Isa { scalar, avx2 };

struct Ops {
  // c (m x n) = a (m x k) * b (k x n)
  void (*gemm_nn)(double* c, const double* a, const double* b, int m, int n, int k);
  // c (m x n) = a^T * b with a (k x m), b (k x n)
  void (*gemm_tn)(double* c, const double* a, const double* b, int m, int n, int k);
  // c (m x n) = a * b^T with a (m x k), b (n x k)
  void (*gemm_nt)(double* c, const double* a, const double* b, int m, int n, int k);
  double (*dot)(const double* x, const double* y, size_t n);
  // y += alpha * x
  void (*axpy)(double* y, double alpha, const double* x, size_t n);
  void (*scal)(double* x, double alpha, size_t n);
};

/// Kernel table in use (selected on first call).
const Ops& ops();

Isa active_isa();
/// Force a specific instruction set (used by the equivalence tests).
/// Requesting an unavailable ISA falls back to scalar.
void set_isa(Isa isa);
bool avx2_available();

const Ops& scalar_ops();
const Ops& avx2_ops();  // valid only if avx2_available()

}  // namespace stiefel::kernels
