#pragma once

#include "vgnet/linalg/matrix.hpp"

namespace vgnet::linalg {

/// Solves a·M + M·aᵀ + q = 0 for stable a (dim ≤ 32) through the Kronecker
/// system (I⊗a + a⊗I)·vec(M) = −vec(q).
///
/// Throws std::domain_error when a is not stable, and NumericalError when
/// the residual exceeds 1e−10·‖q‖_max after refinement.
SymMatrix solve_lyapunov(const Matrix& a, const SymMatrix& q);

/// Max-entry residual ‖aM + Maᵀ + q‖_max.
double lyapunov_residual(const Matrix& a, const SymMatrix& m, const SymMatrix& q);

}  // namespace vgnet::linalg
