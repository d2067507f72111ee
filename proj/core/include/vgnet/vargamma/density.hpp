#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vgnet/vargamma/law.hpp"

namespace vgnet::vargamma {

struct DensityPoint {
  double s = 0.0;
  double f = 0.0;
};

/// Density of the law at s. Routing: n = 1 closed form K₀(|s|/λ)/(πλ)
/// (std::domain_error at s = 0, where it diverges logarithmically);
/// isotropic laws the closed Bessel form; n = 2 the angular integral;
/// n ≥ 3 Fourier inversion of the characteristic function.
double density(const VarianceGammaLaw& law, double s);

/// density() on every grid point; the grid must be finite and ascending.
/// Setup shared between points (the inversion table for n ≥ 3) is built once.
std::vector<DensityPoint> density_profile(const VarianceGammaLaw& law, std::span<const double> grid);

/// |S^{n−1}| K_{(n−1)/2}(|s|/λ) |s|^{(n−1)/2} / (2πλ)^{(n+1)/2}; n = 2 gives
/// e^{−|s|/λ}/(2λ). Finite at s = 0 for n ≥ 2.
double density_isotropic(std::size_t n, double lambda, double s);

/// θ/(2π) ∫₀^π √((1−ε²)/(1+ε cos φ)) e^{−θ|s|√(1+ε cos φ)} dφ by adaptive
/// Gauss–Kronrod. Requires 0 ≤ ε < 1, θ > 0.
double density_two_dim(const TwoDimParams& p, double s);

/// Fourier inversion of the characteristic function on a uniform grid.
///
/// The inverse transform is taken along Im α = −c with c = 0.8/λ_n and the
/// isotropic law with the geometric-mean λ is subtracted and added back in
/// closed form, so the truncated integrand decays like α^{−(n+2)} and the
/// result keeps its relative accuracy far into the tails. The grid period
/// in s is 200·λ_n; the cutoff is cutoff_scale/λ₁. Requires n ≥ 2.
class FourierDensity {
 public:
  explicit FourierDensity(const VarianceGammaLaw& law, double cutoff_scale = 300.0);
  double operator()(double s) const;
  std::size_t grid_size() const noexcept { return residual_.size(); }

 private:
  std::size_t n_;
  double mu_;     // geometric mean of the λ's
  double shift_;  // c
  double step_;   // h
  std::vector<std::complex<double>> residual_;  // (χ − χ_iso)(kh − ic), trapezoid weights folded in
};

double density_fourier(const VarianceGammaLaw& law, double s, double cutoff_scale = 300.0);

/// Direct sphere integral for n ≤ 3: trapezoid in the azimuth and
/// Gauss–Legendre in cos ϑ with `nodes` points per direction.
double density_sphere(const VarianceGammaLaw& law, double s, std::size_t nodes = 96);

/// f(0) = Γ(ν) 2^{ν−1} (2π)^{−(n+1)/2} ∫_{S^{n−1}} dσ/κ, ν = (n−1)/2, n ≥ 2.
/// The sphere integral is done by quadrature on the sphere for n ≤ 3 and by
/// the Gaussian identity ∫ dσ/κ ∝ ∫₀^∞ u^{−1/2} Π(1 + 2uλ_j²)^{−1/2} du above.
double peak_density(const VarianceGammaLaw& law);

/// ∫_{S^{n−1}} dσ/κ for n = 2, 3 by tensor quadrature.
double sphere_inverse_kappa(const VarianceGammaLaw& law, std::size_t nodes = 96);

}  // namespace vgnet::vargamma
