#pragma once

#include <vector>

#include "stiefel/matrix.hpp"
#include "stiefel/rng.hpp"

namespace stiefel {

/// Real skew-symmetric matrix. Construction checks S = -S^T within
/// tol::skew_symmetry, then stores the exactly symmetrized (S - S^T)/2.
/// Dimension 0 is allowed (it shows up as the A-block when p = 1... 0).
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(Matrix entries);
  static SkewMatrix zero(int dim) { return SkewMatrix(Matrix(dim, dim)); }

  int dim() const { return m_.rows(); }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b);
SkewMatrix operator*(double s, const SkewMatrix& m);

/// Orthogonal matrix; special orthogonal (det +1) when flagged, which is
/// the default everywhere in this library.
class Rotation {
 public:
  Rotation() = default;
  explicit Rotation(Matrix entries, bool special = true);

  int dim() const { return m_.rows(); }
  bool special() const { return special_; }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
  bool special_ = true;
};

/// Matrix exponential together with its directional (Frechet) derivative.
struct FrechetResult {
  Matrix value;       // exp(S)
  Matrix derivative;  // d/de exp(S + e E) at e = 0
};

/// Real canonical form of a skew-symmetric matrix: an orthogonal U such
/// that U^T S U is block-diagonal with 2x2 blocks [[0,-a],[a,0]] followed
/// by zeros. Plane k occupies columns (2k, 2k+1) of U; angles are
/// nonnegative and descending.
struct SkewCanonicalForm {
  Matrix u;
  std::vector<double> angles;
};

/// Real canonical form of a rotation: 2x2 rotation blocks with angles in
/// (0, pi] followed by fixed (+1) directions. Angle-pi planes come from
/// pairing -1 eigendirections in the order the factorization produces.
struct RotationCanonicalForm {
  Matrix u;
  std::vector<double> angles;
  int fixed = 0;  // trailing angle-0 columns
};

SkewCanonicalForm skew_canonical_form(const SkewMatrix& s);
RotationCanonicalForm rotation_canonical_form(const Rotation& q);

/// exp(S) for skew S; exactly special orthogonal by construction
/// (cosine/sine blocks in the canonical frame).
Rotation expm_skew(const SkewMatrix& s);

/// Principal skew logarithm of a special orthogonal Q: the minimum
/// Frobenius-norm skew preimage, all rotation angles in [-pi, pi]. At
/// angle pi the preimage is set-valued; the deterministic pairing policy
/// above picks one. With strict = true, any eigenvalue within
/// tol::negative_eigenvalue of -1 raises NegativeEigenvalueAmbiguity
/// instead.
SkewMatrix logm_so(const Rotation& q, bool strict = false);

/// exp(S) and its derivative along E, via the exponential of the
/// block-augmented matrix [[S, E], [0, S]].
FrechetResult dexpm(const SkewMatrix& s, const SkewMatrix& e);

/// Haar-distributed rotation: QR of a Gaussian matrix with the R-diagonal
/// sign convention, then one column flip if the determinant is -1.
Rotation haar_rotation(int dim, RandomStream& rng);

}  // namespace stiefel
