#pragma once

#include <vector>

#include "stiefel/matrix.hpp"

// Thin wrappers over LAPACKE for the dense factorizations behind the
// structured kernels. Column-major throughout, so calls are zero-copy.

namespace stiefel::la {

/// Symmetric eigendecomposition A = V diag(w) V^T, eigenvalues ascending.
void sym_eig(const Matrix& a, Matrix& v, std::vector<double>& w);

/// Full SVD A = U diag(s) V^T (jobu = jobvt = 'A'), singular values descending.
void svd(const Matrix& a, Matrix& u, std::vector<double>& s, Matrix& vt);

/// Solve A X = B; returns X. A is overwritten internally (copy made).
Matrix lu_solve(Matrix a, Matrix b);

/// Sign of det(A) for nonsingular A (+1 or -1) via LU; 0 dims give +1.
int det_sign(Matrix a);

}  // namespace stiefel::la
