#pragma once

#include <vector>

#include "vgnet/linalg/matrix.hpp"

namespace vgnet::linalg {

struct SymEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi eigendecomposition: m = V diag(λ) Vᵀ, ‖VVᵀ − I‖_max ≤ 1e−10.
SymEigen sym_eigen(const SymMatrix& m);
/// Same, for a general matrix that must pass the SymMatrix symmetry check.
SymEigen sym_eigen(const Matrix& m);

/// Applies f to the spectrum: V diag(f(λ)) Vᵀ.
template <typename F>
SymMatrix sym_apply(const SymEigen& e, F&& f) {
  const std::size_t n = e.values.size();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(e.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = e.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * e.vectors(j, k);
    }
  }
  return SymMatrix::symmetrized(out);
}

/// Symmetric PSD square root. Eigenvalues in [−1e−10‖m‖, 0) are clamped to
/// zero; anything more negative is rejected with std::domain_error.
SymMatrix sym_sqrt(const SymMatrix& m);
/// Inverse square root of a positive definite matrix.
SymMatrix sym_inv_sqrt(const SymMatrix& m);

bool is_positive_definite(const SymMatrix& m);
bool is_positive_semidefinite(const SymMatrix& m, double rel_tol = 1e-10);

/// Pivoted Cholesky factor F with F·Fᵀ = m for PSD m. Pivots down to
/// −1e−12·max diag are treated as zero; more negative pivots raise
/// NumericalError.
Matrix psd_factor(const SymMatrix& m);

}  // namespace vgnet::linalg
