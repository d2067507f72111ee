#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "vgnet/linalg/matrix.hpp"

namespace vgnet::linalg {

/// Eigenvalues of a general real square matrix (dim ≤ 32): characteristic
/// polynomial by Faddeev–LeVerrier, roots by Durand–Kerner, each simple root
/// then polished by Newton steps on det(a − λI) evaluated from the matrix.
/// Polynomial roots of multiplicity k only carry ~eps^{1/k} digits, so when
/// the roots cluster the spectrum is recomputed by Hessenberg QR instead.
/// Throws NumericalError if the root iteration does not converge.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// max Re λ over the spectrum of a.
double spectral_abscissa(const Matrix& a);

struct ControllabilityReport {
  bool controllable = false;
  std::size_t rank = 0;  // rank of [b, ab, …, a^{n−1}b]
  std::size_t dim = 0;
};

/// Kalman rank test on the Krylov matrix, rank by pivoted Gram–Schmidt with
/// tolerance 1e−10 relative to the largest column.
ControllabilityReport is_controllable(const Matrix& a, const Matrix& b);

}  // namespace vgnet::linalg
