#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/numeric/random.hpp"

namespace vgnet::vargamma {

/// Parameters of the two-dimensional density in the angular form:
/// ε = (λ₂² − λ₁²)/(λ₂² + λ₁²), θ = (½(λ₁⁻² + λ₂⁻²))^{1/2}.
struct TwoDimParams {
  double epsilon = 0.0;
  double theta = 1.0;
};

/// Limit law of X·LX − Y·LY, X, Y i.i.d. N(0, M), determined by the
/// eigenvalues λ₁ ≤ … ≤ λ_n of N = 2L^{1/2}ML^{1/2}.
class VarianceGammaLaw {
 public:
  /// Sorts the input. Throws std::invalid_argument unless nonempty, finite
  /// and strictly positive.
  explicit VarianceGammaLaw(std::vector<double> lambdas);

  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  std::size_t dim() const noexcept { return lambdas_.size(); }
  double lambda_min() const noexcept { return lambdas_.front(); }
  double lambda_max() const noexcept { return lambdas_.back(); }

  /// All λ equal up to 1e−12 relative.
  bool isotropic() const noexcept;

  /// Requires dim() == 2.
  TwoDimParams two_dim_params() const;

 private:
  std::vector<double> lambdas_;
};

TwoDimParams two_dim_params(double lambda1, double lambda2);

/// Law from a quadratic form L and a covariance M, both positive definite
/// of equal dimension.
VarianceGammaLaw make_vg(const linalg::SymMatrix& l, const linalg::SymMatrix& m);

/// Π (1 + α²λ_j²)^{−1/2}.
double char_fn(const VarianceGammaLaw& law, double alpha);

/// Analytic continuation of char_fn, principal branch in every factor.
/// Exact for |Im α| < 1/λ_n.
std::complex<double> char_fn(const VarianceGammaLaw& law, std::complex<double> alpha);

/// Rate function |θ|/λ_n.
double ldp_rate(const VarianceGammaLaw& law, double theta);

/// Draws Σ_j λ_j U_j V_j with U, V independent standard normal vectors.
std::vector<double> sample(const VarianceGammaLaw& law, numeric::Rng& rng, std::size_t count);

}  // namespace vgnet::vargamma
