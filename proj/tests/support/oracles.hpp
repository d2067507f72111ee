#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "vgnet/linalg/matrix.hpp"

// Reference computations that share no code path with the library. Used to
// derive frozen expectations and for cross-checks in tests.
namespace vgnet::testing {

Eigen::MatrixXd to_eigen(const linalg::Matrix& m);
linalg::Matrix from_eigen(const Eigen::MatrixXd& m);

/// max Re λ from Eigen's real Schur based solver.
double eigen_abscissa(const linalg::Matrix& a);

/// Taylor series in long double with scaling and squaring.
linalg::Matrix taylor_expm(const linalg::Matrix& a);

/// ∫₀^∞ e^{sA} Q e^{sAᵀ} ds by 20-point Gauss–Legendre panels, propagated
/// with taylor_expm, until a panel contributes < 1e−16 of the total.
linalg::Matrix lyapunov_quadrature(const linalg::Matrix& a, const linalg::Matrix& q);

/// Boost's K_ν(x); +inf where Boost reports overflow.
double boost_bessel_k(double nu, double x);

/// (1/π)∫₀^∞ cos(αs) Π(1 + α²λ²)^{−1/2} dα by Ooura's double-exponential
/// Fourier rule (exp–sinh at s = 0).
double fourier_density(const std::vector<double>& lambdas, double s);

/// det(I − 2iα·diag(−L, L)·Σ) for the joint covariance Σ = [[M, Δᵀ], [Δ, M]]
/// of (X_0, X_t), Δ = e^{tA}M, on the full state space (L may be singular).
/// Equals χ_t(α)^{−2} for Q_t = X_t·LX_t − X_0·LX_0.
std::complex<double> qt_inverse_square_charfn(const linalg::Matrix& a, const linalg::Matrix& m,
                                              const linalg::Matrix& l, double t, double alpha);

}  // namespace vgnet::testing
