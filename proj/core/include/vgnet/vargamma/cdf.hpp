#pragma once

#include <cstddef>
#include <vector>

#include "vgnet/vargamma/law.hpp"

namespace vgnet::vargamma {

/// Tabulated distribution function of a variance-gamma law.
///
/// [0, 60λ_n] is cut into panels (dyadically graded towards s = 0, where
/// the density is not smooth, then of width λ_n/4). On each panel the
/// density is sampled at Gauss–Legendre nodes and kept as a Legendre
/// expansion, which integrates exactly to the panel's partial mass. Beyond
/// the table the tail is closed by f(s_max)·λ_n·e^{−(s−s_max)/λ_n}.
/// Symmetry gives F(0) = ½ and F(−s) = 1 − F(s).
class VgCdf {
 public:
  explicit VgCdf(const VarianceGammaLaw& law);

  double operator()(double s) const;
  /// Mass of (s, ∞) for s ≥ 0 without cancellation.
  double upper_tail(double s) const;
  /// Total mass of the table plus closure; 1 up to quadrature error.
  double total_mass() const noexcept { return 0.5 + cumulative_.back() + tail_mass_; }

 private:
  double partial(std::size_t panel, double s) const;

  double lambda_max_;
  std::vector<double> edges_;                     // panel boundaries, edges_[0] = 0
  std::vector<double> cumulative_;                // ∫₀^{edges_[k]} f
  std::vector<std::vector<double>> legendre_;     // per-panel Legendre coefficients
  double tail_mass_ = 0.0;
};

/// Convenience; builds a VgCdf per call.
double cdf(const VarianceGammaLaw& law, double s);

}  // namespace vgnet::vargamma
