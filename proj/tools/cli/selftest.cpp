#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "vgnet/linalg/lyapunov.hpp"
#include "vgnet/networks/harmonic.hpp"
#include "vgnet/networks/rc_circuit.hpp"
#include "vgnet/numeric/random.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"
#include "vgnet/specfun/bessel.hpp"
#include "vgnet/statlab/goodness.hpp"
#include "vgnet/statlab/sample.hpp"
#include "vgnet/vargamma/density.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::cli {

namespace {

using linalg::Matrix;
using linalg::SymMatrix;

struct Check {
  std::string name;
  bool statistical = false;
  double tolerance = 0.0;
  std::function<double()> value;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Matrix stable_matrix(std::size_t n) {
  auto rng = numeric::make_stream(20240601);
  numeric::NormalSource z(rng);
  Matrix s(n, n), k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s(i, j) = z();
      k(i, j) = z();
    }
  return (s * s.transposed()) * (-1.0 / n) - Matrix::identity(n) * 0.5 + (k - k.transposed());
}

networks::NetworkSpec chain(double k_b) {
  networks::NetworkSpec s;
  const std::size_t n = 4;
  Matrix c(n, n);
  for (std::size_t x = 0; x + 1 < n; ++x) {
    const double w = 0.5 + 0.25 * x;
    c(x, x) += w;
    c(x + 1, x + 1) += w;
    c(x, x + 1) -= w;
    c(x + 1, x) -= w;
  }
  s.coupling = SymMatrix(c);
  s.masses = {1.0, 1.5, 0.8, 1.2};
  s.frequencies = {1.0, 0.7, 1.3, 0.9};
  s.gammas = {0.6, 0.0, 0.0, 0.4};
  s.temperatures.assign(n, 300.0);
  s.k_b = k_b;
  return s;
}

std::vector<Check> checks(const RunConfig& c, double k_b) {
  std::vector<Check> out;
  out.push_back({"lyapunov_vs_quadrature", false, 1e-8, [] {
                   const Matrix a = stable_matrix(6);
                   Matrix b = Matrix::identity(6);
                   b(0, 1) = 0.3;
                   b(4, 2) = -0.7;
                   const SymMatrix m = linalg::solve_lyapunov(a, SymMatrix::symmetrized(b * b.transposed()));
                   const SymMatrix q = ou::stationary_covariance_quadrature(a, b);
                   double diff = 0.0;
                   for (std::size_t i = 0; i < 6; ++i)
                     for (std::size_t j = 0; j < 6; ++j) diff = std::max(diff, std::abs(m(i, j) - q(i, j)));
                   return diff / q.max_abs();
                 }});
  out.push_back({"two_dim_density_vs_inversion", false, 1e-6, [] {
                   const vargamma::VarianceGammaLaw law({0.7, 1.6});
                   const vargamma::FourierDensity inv(law, 2000.0);
                   const auto p = law.two_dim_params();
                   double worst = 0.0;
                   for (int k = -200; k <= 200; ++k) {
                     const double s = 20.0 * law.lambda_max() * k / 200.0;
                     worst = std::max(worst, std::abs(vargamma::density_two_dim(p, s) - inv(s)));
                   }
                   return worst / vargamma::peak_density(law);
                 }});
  out.push_back({"rc_closed_form_vs_numeric", false, 1e-9, [k_b] {
                   networks::RCCircuitSpec rc{1e8, 1e8, 1e-10, 6.8e-10, 4.2e-10, 88.0, 296.0, k_b};
                   const auto law = ou::limit_law(networks::rc_model(rc), networks::rc_heat_observable(rc));
                   const auto ev = networks::rc_eigenvalues(rc);
                   return std::max(rel(law.lambda_min(), ev.lambda_minus), rel(law.lambda_max(), ev.lambda_plus));
                 }});
  out.push_back({"kinetic_universality", false, 1e-10, [k_b] {
                   const auto spec = chain(k_b);
                   const networks::SubnetworkSelection sel({1, 2}, 4);
                   const auto law = ou::limit_law(networks::langevin_model(spec), networks::kinetic_observable(spec, sel));
                   double worst = 0.0;
                   for (double l : law.lambdas()) worst = std::max(worst, rel(l, k_b * 300.0));
                   return worst;
                 }});
  out.push_back({"total_energy_vs_schur", false, 1e-8, [k_b] {
                   const auto spec = chain(k_b);
                   const networks::SubnetworkSelection sel({1}, 4);
                   const auto law =
                       ou::limit_law(networks::langevin_model(spec), networks::total_energy_observable(spec, sel));
                   return rel(law.lambda_max(), k_b * 300.0 / (1.0 - networks::schur_theta(spec, sel)));
                 }});
  out.push_back({"bessel_integral_vs_half_integer", false, 1e-10, [] {
                   double worst = 0.0;
                   for (int m = 0; m <= 6; ++m)
                     for (double x : {0.05, 0.5, 2.0, 9.0, 30.0})
                       worst = std::max(worst, rel(specfun::bessel_k_integral(m + 0.5, x),
                                                   specfun::bessel_k_half_integer(m, x)));
                   return worst;
                 }});
  // Statistical: the tolerance is the 1% critical value / the 4σ band.
  out.push_back({"laplace_sample_ks", true, statlab::ks_critical(100000, 0.01), [seed = c.seed] {
                   auto rng = numeric::make_stream(seed);
                   const vargamma::VarianceGammaLaw law({1.0, 1.0});
                   return statlab::ks_distance(vargamma::sample(law, rng, 100000), law);
                 }});
  out.push_back({"qt_mean_z", true, 4.0, [seed = c.seed, workers = c.workers] {
                   const auto model =
                       ou::build_model(Matrix{{-1.0, 0.5}, {-0.5, -1.0}}, Matrix::identity(2) * std::sqrt(2.0));
                   const ou::QuadraticObservable obs(SymMatrix::identity(2));
                   const auto s = statlab::sample_qt(model, obs, 5.0, 100000, seed, workers);
                   double mean = 0.0, sq = 0.0;
                   for (double v : s.values) {
                     mean += v;
                     sq += v * v;
                   }
                   const double n = static_cast<double>(s.count());
                   mean /= n;
                   return std::abs(mean) / std::sqrt((sq / n - mean * mean) / n);
                 }});
  return out;
}

}  // namespace

CommandResult cmd_selftest(const RunConfig& c) {
  if (!(c.tol_scale > 0.0)) throw ConfigError("--tol-scale must be positive");
  const double k_b = networks::boltzmann_constant(c.units.value_or(networks::UnitSystem::kSI));
  std::ostringstream os;
  bool numerical_fail = false, statistical_fail = false;
  for (const auto& check : checks(c, k_b)) {
    const double v = check.value();
    const double tol = check.tolerance * c.tol_scale;
    const bool pass = v <= tol;
    if (!pass) (check.statistical ? statistical_fail : numerical_fail) = true;
    os << (pass ? "PASS " : "FAIL ") << check.name << " value=" << format_number(v) << " tol=" << format_number(tol)
       << (check.statistical ? " (statistical)" : "") << '\n';
  }
  CommandResult r;
  r.exit_code = numerical_fail ? kExitNumerical : statistical_fail ? kExitStatistical : kExitOk;
  os << (r.exit_code == kExitOk ? "selftest: all checks passed" : "selftest: FAILED") << '\n';
  r.primary = os.str();
  return r;
}

}  // namespace vgnet::cli
