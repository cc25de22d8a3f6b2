#pragma once

#include "stiefel/matrix.hpp"

namespace stiefel::detail {

/// General dense matrix exponential: [13/13] Pade approximant with
/// norm-based scaling and repeated squaring. Used where the argument is not
/// skew-symmetric (the block-augmented Frechet derivative).
Matrix pade_expm(const Matrix& a);

}  // namespace stiefel::detail
