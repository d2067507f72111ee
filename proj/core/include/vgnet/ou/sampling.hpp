#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/numeric/random.hpp"
#include "vgnet/ou/model.hpp"

namespace vgnet::ou {

/// Exact draws of (Z_0, Z_t) from the stationary joint law
/// [[M, Δᵀ], [Δ, M]], Δ = e^{tA}M: Z_0 = F_M ξ and
/// Z_t = e^{tA} Z_0 + F_c ξ′ with F_c F_cᵀ = M − e^{tA} M e^{tAᵀ}.
/// Factorizations are computed once per (model, t).
class StationaryPairSampler {
 public:
  /// Requires a positive definite stationary covariance. Throws
  /// NumericalError if the conditional covariance is not PSD within
  /// tolerance.
  StationaryPairSampler(const LinearSDEModel& model, double t);

  std::size_t dim() const noexcept { return factor_m_.rows(); }
  double t() const noexcept { return t_; }
  void draw(numeric::Rng& rng, std::span<double> x0, std::span<double> xt) const;

 private:
  double t_;
  linalg::Matrix factor_m_;
  linalg::Matrix propagator_;
  linalg::Matrix factor_cond_;
};

struct StatePair {
  std::vector<double> x0;
  std::vector<double> xt;
};

std::vector<StatePair> sample_stationary_pair(const LinearSDEModel& model, double t, numeric::Rng& rng,
                                              std::size_t count);

/// Exact skeleton on an ascending time grid: stationary start, then
/// Z_{k+1} = e^{hA} Z_k + ξ_k with ξ_k ~ N(0, M − e^{hA} M e^{hAᵀ}).
std::vector<std::vector<double>> sample_path(const LinearSDEModel& model, std::span<const double> t_grid,
                                             numeric::Rng& rng);

/// Conditional increment covariance M − e^{hA} M e^{hAᵀ}.
linalg::SymMatrix transition_covariance(const LinearSDEModel& model, double h);

}  // namespace vgnet::ou
