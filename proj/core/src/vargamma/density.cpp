#include "vgnet/vargamma/density.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vgnet/numeric/quadrature.hpp"
#include "vgnet/specfun/bessel.hpp"

namespace vgnet::vargamma {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

double sphere_area(std::size_t n) {
  const double h = 0.5 * static_cast<double>(n);
  return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

// x^ν K_ν(x), 0 when K_ν underflows.
double xnu_bessel(double nu, double x) {
  const auto k = specfun::bessel_k_checked(nu, x);
  if (k.underflow) return 0.0;
  return std::pow(x, nu) * k.value;
}

double density_one_dim(double lambda, double s) {
  if (s == 0.0)
    throw std::domain_error("density: the one-dimensional law diverges logarithmically at s = 0");
  const double x = std::abs(s) / lambda;
  const auto k = specfun::bessel_k_checked(0.0, x);
  return k.underflow ? 0.0 : k.value / (kPi * lambda);
}

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw std::invalid_argument("density_profile: non-finite grid point");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("density_profile: grid is not strictly ascending");
  }
}

}  // namespace

double density_isotropic(std::size_t n, double lambda, double s) {
  if (n == 0) throw std::invalid_argument("density_isotropic: n must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("density_isotropic: lambda must be positive");
  if (n == 1) return density_one_dim(lambda, s);
  if (n == 2) return std::exp(-std::abs(s) / lambda) / (2.0 * lambda);
  const double nu = 0.5 * static_cast<double>(n - 1);
  const double x = std::abs(s) / lambda;
  // |s|^ν K_ν(|s|/λ) = λ^ν · x^ν K_ν(x); the x → 0 limit is Γ(ν) 2^{ν−1}.
  const double core = x == 0.0 ? std::tgamma(nu) * std::pow(2.0, nu - 1.0) : xnu_bessel(nu, x);
  return sphere_area(n) * core * std::pow(lambda, nu) /
         std::pow(2.0 * kPi * lambda, 0.5 * static_cast<double>(n + 1));
}

double density_two_dim(const TwoDimParams& p, double s) {
  const double eps = p.epsilon;
  const double theta = p.theta;
  if (!(eps >= 0.0 && eps < 1.0) || !(theta > 0.0))
    throw std::invalid_argument("density_two_dim: need 0 <= epsilon < 1 and theta > 0");
  const double ts = theta * std::abs(s);
  const double base = std::sqrt(1.0 - eps);
  const double scale = std::sqrt(1.0 - eps * eps);
  // Factor e^{−θ|s|√(1−ε)} out; the remaining exponent is ≤ 0.
  auto integrand = [&](double phi) {
    const double w = 1.0 + eps * std::cos(phi);
    const double r = std::sqrt(w);
    return scale / r * std::exp(-ts * (w - (1.0 - eps)) / (r + base));
  };
  const double integral = numeric::integrate_adaptive(integrand, 0.0, kPi, 1e-13, 25).value;
  return theta / (2.0 * kPi) * std::exp(-ts * base) * integral;
}

FourierDensity::FourierDensity(const VarianceGammaLaw& law, double cutoff_scale) : n_(law.dim()) {
  if (n_ < 2) throw std::invalid_argument("FourierDensity: requires n >= 2");
  if (!(cutoff_scale > 0.0)) throw std::invalid_argument("FourierDensity: cutoff scale must be positive");
  const auto& lam = law.lambdas();
  double log_sum = 0.0;
  for (double l : lam) log_sum += std::log(l);
  mu_ = std::exp(log_sum / static_cast<double>(n_));
  const double lmax = law.lambda_max();
  shift_ = 0.8 / lmax;
  step_ = 2.0 * kPi / (200.0 * lmax);
  const double cutoff = cutoff_scale / law.lambda_min();
  const auto count = static_cast<std::size_t>(std::ceil(cutoff / step_)) + 1;
  residual_.resize(count);
  const double half_n = 0.5 * static_cast<double>(n_);
  for (std::size_t k = 0; k < count; ++k) {
    const cplx z(static_cast<double>(k) * step_, -shift_);
    const cplx z2 = z * z;
    cplx prod = 1.0;
    for (double l : lam) prod *= std::sqrt(1.0 + z2 * (l * l));
    const cplx iso = std::pow(std::sqrt(1.0 + z2 * (mu_ * mu_)), half_n * 2.0);
    cplx r = 1.0 / prod - 1.0 / iso;
    if (k == 0) r *= 0.5;
    residual_[k] = r;
  }
}

double FourierDensity::operator()(double s) const {
  const double a = std::abs(s);
  // Σ_k Re[r_k e^{−ikha}], phases advanced by a unit-modulus rotation and
  // reset exactly every 1000 steps.
  const cplx rot = std::polar(1.0, -step_ * a);
  cplx phase = 1.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < residual_.size(); ++k) {
    if (k % 1000 == 0) phase = std::polar(1.0, -step_ * a * static_cast<double>(k));
    sum += (residual_[k] * phase).real();
    phase *= rot;
  }
  const double correction = std::exp(-shift_ * a) * step_ * sum / kPi;
  return density_isotropic(n_, mu_, a) + correction;
}

double density_fourier(const VarianceGammaLaw& law, double s, double cutoff_scale) {
  return FourierDensity(law, cutoff_scale)(s);
}

double density(const VarianceGammaLaw& law, double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("density: s must be finite");
  const std::size_t n = law.dim();
  if (n == 1) return density_one_dim(law.lambda_min(), s);
  if (law.isotropic()) return density_isotropic(n, law.lambda_max(), s);
  if (n == 2) return density_two_dim(law.two_dim_params(), s);
  return FourierDensity(law)(s);
}

std::vector<DensityPoint> density_profile(const VarianceGammaLaw& law, std::span<const double> grid) {
  check_grid(grid);
  std::vector<DensityPoint> out;
  out.reserve(grid.size());
  if (law.dim() >= 3 && !law.isotropic()) {
    const FourierDensity f(law);
    for (double s : grid) out.push_back({s, f(s)});
  } else {
    for (double s : grid) out.push_back({s, density(law, s)});
  }
  return out;
}

double density_sphere(const VarianceGammaLaw& law, double s, std::size_t nodes) {
  const std::size_t n = law.dim();
  const auto& lam = law.lambdas();
  const double a = std::abs(s);
  if (n == 1) return density_one_dim(lam[0], s);
  if (n > 3) throw std::invalid_argument("density_sphere: only n <= 3 is supported");
  if (nodes < 4) throw std::invalid_argument("density_sphere: too few nodes");
  const double nu = 0.5 * static_cast<double>(n - 1);
  const double power = 0.5 * static_cast<double>(n + 1);
  // |s|^ν K_ν(|s|/κ) / (2πκ)^{(n+1)/2} = κ^ν·x^ν K_ν(x) / (2πκ)^{(n+1)/2}
  auto kernel = [&](double kappa) {
    const double x = a / kappa;
    const double core = x == 0.0 ? std::tgamma(nu) * std::pow(2.0, nu - 1.0) : xnu_bessel(nu, x);
    return core * std::pow(kappa, nu) / std::pow(2.0 * kPi * kappa, power);
  };
  const std::size_t m_phi = 2 * nodes;
  const double dphi = 2.0 * kPi / static_cast<double>(m_phi);
  double total = 0.0;
  if (n == 2) {
    for (std::size_t j = 0; j < m_phi; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * dphi;
      const double c = std::cos(phi), sn = std::sin(phi);
      total += kernel(std::sqrt(lam[0] * lam[0] * c * c + lam[1] * lam[1] * sn * sn));
    }
    return total * dphi;
  }
  const auto& rule = numeric::gauss_legendre(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double z = rule.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double ring = 0.0;
    for (std::size_t j = 0; j < m_phi; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * dphi;
      const double x = rho * std::cos(phi), y = rho * std::sin(phi);
      ring += kernel(std::sqrt(lam[0] * lam[0] * x * x + lam[1] * lam[1] * y * y + lam[2] * lam[2] * z * z));
    }
    total += rule.weights[i] * ring * dphi;
  }
  return total;
}

double sphere_inverse_kappa(const VarianceGammaLaw& law, std::size_t nodes) {
  const std::size_t n = law.dim();
  const auto& lam = law.lambdas();
  if (n < 2 || n > 3) throw std::invalid_argument("sphere_inverse_kappa: only n = 2, 3 are supported");
  const std::size_t m_phi = 2 * nodes;
  const double dphi = 2.0 * kPi / static_cast<double>(m_phi);
  double total = 0.0;
  if (n == 2) {
    for (std::size_t j = 0; j < m_phi; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * dphi;
      const double c = std::cos(phi), sn = std::sin(phi);
      total += 1.0 / std::sqrt(lam[0] * lam[0] * c * c + lam[1] * lam[1] * sn * sn);
    }
    return total * dphi;
  }
  const auto& rule = numeric::gauss_legendre(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double z = rule.nodes[i];
    const double rho2 = std::max(0.0, 1.0 - z * z);
    double ring = 0.0;
    for (std::size_t j = 0; j < m_phi; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * dphi;
      const double c = std::cos(phi), sn = std::sin(phi);
      ring += 1.0 / std::sqrt(rho2 * (lam[0] * lam[0] * c * c + lam[1] * lam[1] * sn * sn) +
                              lam[2] * lam[2] * z * z);
    }
    total += rule.weights[i] * ring * dphi;
  }
  return total;
}

double peak_density(const VarianceGammaLaw& law) {
  const std::size_t n = law.dim();
  if (n < 2) throw std::domain_error("peak_density: the one-dimensional law has no finite peak");
  const double nu = 0.5 * static_cast<double>(n - 1);
  double sphere = 0.0;
  if (n <= 3) {
    sphere = sphere_inverse_kappa(law);
  } else {
    // ∫_{Rⁿ} e^{−|x|²/2}/κ(x) dx = 2^{ν−1} Γ(ν) ∫ dσ/κ, and the left side is
    // (2π)^{n/2} π^{−1/2} ∫₀^∞ u^{−1/2} Π(1 + 2uλ_j²)^{−1/2} du.
    const auto& lam = law.lambdas();
    const double l2 = law.lambda_max() * law.lambda_max();
    // u = v²/l2 removes the endpoint singularity.
    auto integrand = [&](double v) {
      const double u = v * v / l2;
      double p = 1.0;
      for (double l : lam) p *= 1.0 + 2.0 * u * l * l;
      return 2.0 / std::sqrt(p);
    };
    const double integral = numeric::integrate_tanh_sinh(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-14).value /
                            std::sqrt(l2);
    const double gauss = std::pow(2.0 * kPi, 0.5 * static_cast<double>(n)) * integral / std::sqrt(kPi);
    sphere = gauss / (std::pow(2.0, nu - 1.0) * std::tgamma(nu));
  }
  return std::tgamma(nu) * std::pow(2.0, nu - 1.0) * sphere /
         std::pow(2.0 * kPi, 0.5 * static_cast<double>(n + 1));
}

}  // namespace vgnet::vargamma
