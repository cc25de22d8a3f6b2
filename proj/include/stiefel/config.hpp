#pragma once

// Numerical tolerances used across the library. Every property test and
// every construction-time invariant pins its threshold here so there is a
// single tuning point.

namespace stiefel::tol {

// Construction-time invariants.
inline constexpr double skew_symmetry = 1e-13;       // |S + S^T| allowed before symmetrization
inline constexpr double rotation_orthogonality = 1e-12;
inline constexpr double stiefel_orthonormality = 1e-10;
inline constexpr double tangency = 1e-10;

// Kernel guarantees.
inline constexpr double expm_orthogonality = 1e-12;
inline constexpr double logm_roundtrip = 1e-10;
inline constexpr double negative_eigenvalue = 1e-9;  // strict-mode detection of angle-pi planes
inline constexpr double dexpm_vs_quadrature = 1e-10;
inline constexpr double dexpm_linearity = 1e-11;

// Geometry.
inline constexpr double fiber_projection = 1e-10;
inline constexpr double lift_metric_invariance = 1e-12;
inline constexpr double fiber_invariance = 1e-12;

// Conjugate-point machinery.
inline constexpr double root_accuracy = 1e-12;
inline constexpr double witness_residual = 1e-9;
inline constexpr double witness_cli_gate = 1e-8;

// Certificate search: strict-inequality slack on L < rho so that a length
// analytically equal to rho is never reported as a shortcut.
inline constexpr double certificate_slack = 1e-12;

}  // namespace stiefel::tol
