#pragma once

#include <complex>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"

namespace vgnet::ou {

/// Exact law of Q_t = X_t·LX_t − X_0·LX_0 as a Gaussian quadratic form
/// Q_t = Z·ÑZ, Z = (U_t, V_t) ~ N(0, M̃_t), on the support of L.
///
/// With K = N^{−1/2}L^{1/2} and Δ the lag covariance on the support,
/// A(t) = K(Δ + Δᵀ)Kᵀ, B(t) = K(Δ − Δᵀ)Kᵀ, M̃_t = [[I − A, B], [Bᵀ, I + A]]
/// and Ñ = ½[[0, N], [N, 0]].
struct FiniteTimeQtLaw {
  double t = 0.0;
  linalg::SymMatrix mtilde;
  linalg::SymMatrix ntilde;
  linalg::Matrix a_block;  // symmetric
  linalg::Matrix b_block;  // antisymmetric
  /// Eigenvalues of M̃^{1/2} Ñ M̃^{1/2}, ascending.
  std::vector<double> mu;
};

FiniteTimeQtLaw finite_time_qt_law(const LinearSDEModel& model, const QuadraticObservable& obs, double t);

/// det(I − 2iα M̃^{1/2}ÑM̃^{1/2})^{−1/2} = Π_k (1 − 2iαμ_k)^{−1/2}. Every
/// factor has real part 1, so the principal branch of each square root is
/// the continuous one from α = 0.
std::complex<double> finite_time_qt_charfn(const FiniteTimeQtLaw& law, double alpha);

}  // namespace vgnet::ou
