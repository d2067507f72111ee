#include "vgnet/networks/rc_circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vgnet/linalg/eigen.hpp"

namespace vgnet::networks {

using linalg::Matrix;
using linalg::SymMatrix;

void RCCircuitSpec::validate() const {
  const double values[] = {r1, r2, c, c1, c2, t1, t2, k_b};
  const char* names[] = {"R1", "R2", "C", "C1", "C2", "T1", "T2", "k_B"};
  for (int i = 0; i < 8; ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      std::ostringstream msg;
      msg << "RCCircuitSpec: " << names[i] << " must be positive and finite, got " << values[i];
      throw std::invalid_argument(msg.str());
    }
  }
}

SymMatrix RCCircuitSpec::capacitance() const { return SymMatrix{{c + c2, -c}, {-c, c + c1}}; }

ou::LinearSDEModel rc_model(const RCCircuitSpec& spec) {
  spec.validate();
  const Matrix cinv = linalg::inverse(spec.capacitance().matrix());
  const Matrix rinv{{1.0 / spec.r1, 0.0}, {0.0, 1.0 / spec.r2}};
  const Matrix noise{{std::sqrt(2.0 * spec.k_b * spec.t1 / spec.r1), 0.0},
                     {0.0, std::sqrt(2.0 * spec.k_b * spec.t2 / spec.r2)}};
  return ou::build_model(-1.0 * (cinv * rinv), cinv * noise);
}

ou::QuadraticObservable rc_heat_observable(const RCCircuitSpec& spec) {
  spec.validate();
  return ou::QuadraticObservable(SymMatrix(0.5 * spec.capacitance().matrix()), ou::ObservableKind::kRcHeat);
}

RCEigenvalues rc_eigenvalues(const RCCircuitSpec& spec) {
  spec.validate();
  RCEigenvalues e;
  const double t1 = spec.t1, t2 = spec.t2;
  e.coupling = std::sqrt(spec.r1 * spec.r2) * spec.c /
               (0.5 * (spec.r1 + spec.r2) * spec.c + 0.5 * (spec.r1 * spec.c2 + spec.r2 * spec.c1));
  const double l2 = e.coupling * e.coupling;
  const double root = std::sqrt(1.0 - l2);
  e.lambda_minus = 0.5 * spec.k_b * (t1 + t2 - std::abs(t1 - t2) * root);
  e.lambda_plus = 0.5 * spec.k_b * (t1 + t2 + std::abs(t1 - t2) * root);
  const double dt2 = (t1 - t2) * (t1 - t2);
  e.epsilon = root * std::abs(t1 * t1 - t2 * t2) / ((t1 * t1 + t2 * t2) - 0.5 * l2 * dt2);
  e.theta = std::sqrt(0.5 * (t1 * t1 + t2 * t2) - 0.25 * l2 * dt2) / (spec.k_b * (t1 * t2 + 0.25 * l2 * dt2));
  const double r = e.lambda_minus / e.lambda_plus;
  e.epsilon_from_lambdas = (1.0 - r * r) / (1.0 + r * r);
  return e;
}

vargamma::VarianceGammaLaw rc_limit_law(const RCCircuitSpec& spec) {
  const auto e = rc_eigenvalues(spec);
  return vargamma::VarianceGammaLaw({e.lambda_minus, e.lambda_plus});
}

std::vector<vargamma::DensityPoint> rc_limit_density(const RCCircuitSpec& spec, std::span<const double> grid,
                                                     EnergyUnit unit) {
  const auto law = rc_limit_law(spec);
  const double scale = unit == EnergyUnit::kThermalT2 ? spec.k_b * spec.t2 : 1.0;
  std::vector<double> joules(grid.begin(), grid.end());
  for (double& s : joules) s *= scale;
  auto out = vargamma::density_profile(law, joules);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].s = grid[i];
    out[i].f *= scale;
  }
  return out;
}

}  // namespace vgnet::networks
