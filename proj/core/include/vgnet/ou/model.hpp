#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vgnet/linalg/matrix.hpp"

namespace vgnet::ou {

/// dZ = A Z dt + B dw together with its stationary covariance and the
/// certificates computed at construction. Immutable; build with build_model.
class LinearSDEModel {
 public:
  const linalg::Matrix& a() const noexcept { return a_; }
  const linalg::Matrix& b() const noexcept { return b_; }
  const linalg::SymMatrix& m_stat() const noexcept { return m_; }
  std::size_t dim() const noexcept { return a_.rows(); }

  double spectral_abscissa() const noexcept { return abscissa_; }
  bool controllable() const noexcept { return controllable_; }
  std::size_t controllability_rank() const noexcept { return rank_; }
  /// ‖AM + MAᵀ + BBᵀ‖_max / ‖BBᵀ‖_max.
  double lyapunov_residual() const noexcept { return residual_; }
  bool m_positive_definite() const noexcept { return m_pd_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  friend LinearSDEModel build_model(const linalg::Matrix& a, const linalg::Matrix& b);
  LinearSDEModel() = default;

  linalg::Matrix a_;
  linalg::Matrix b_;
  linalg::SymMatrix m_;
  double abscissa_ = 0.0;
  bool controllable_ = false;
  std::size_t rank_ = 0;
  double residual_ = 0.0;
  bool m_pd_ = false;
  std::vector<std::string> warnings_;
};

/// Validates shapes and finiteness, certifies stability (std::domain_error
/// otherwise), solves the Lyapunov equation and runs the Kalman rank test.
/// An uncontrollable pair is accepted with a warning; M is then only PSD.
LinearSDEModel build_model(const linalg::Matrix& a, const linalg::Matrix& b);

struct LagCovariance {
  double t = 0.0;
  linalg::Matrix delta;  // ⟨Z_t Z_0ᵀ⟩ = e^{tA} M
};

LagCovariance lag_cov(const LinearSDEModel& model, double t);

/// ∫₀^∞ e^{sA} BBᵀ e^{sAᵀ} ds by composite Gauss–Legendre on panels, with
/// the panel propagators taken from the semigroup property. Truncated once
/// a panel adds less than rel_tol of the running total.
linalg::SymMatrix stationary_covariance_quadrature(const linalg::Matrix& a, const linalg::Matrix& b,
                                                   double rel_tol = 1e-13);

}  // namespace vgnet::ou
