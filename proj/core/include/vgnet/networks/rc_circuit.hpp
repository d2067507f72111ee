#pragma once

#include <span>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/networks/units.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"
#include "vgnet/vargamma/density.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::networks {

/// Two resistors at temperatures T1, T2 coupled through C, with inner
/// capacitances C1, C2. State is (V1, V2).
struct RCCircuitSpec {
  double r1 = 0.0;
  double r2 = 0.0;
  double c = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double k_b = kBoltzmannSI;

  /// Every parameter strictly positive and finite.
  void validate() const;
  /// [[C + C2, −C], [−C, C + C1]].
  linalg::SymMatrix capacitance() const;
};

/// A = −C⁻¹R⁻¹, B = C⁻¹(TR⁻¹)^{1/2} with T = 2k_B diag(T1, T2).
ou::LinearSDEModel rc_model(const RCCircuitSpec& spec);

/// Q_t = ½(V_t·CV_t − V_0·CV_0), i.e. L = ½C.
ou::QuadraticObservable rc_heat_observable(const RCCircuitSpec& spec);

struct RCEigenvalues {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double coupling = 0.0;  // Λ ∈ (0, 1)
  double epsilon = 0.0;   // closed form in T1, T2, Λ
  double theta = 0.0;     // closed form in T1, T2, Λ
  /// (λ₊² − λ₋²)/(λ₊² + λ₋²) from the eigenvalues, for cross-checking epsilon.
  double epsilon_from_lambdas = 0.0;
};

/// λ± = (k_B/2)(T1 + T2 ± |T1 − T2|√(1 − Λ²)) with
/// Λ = √(R1R2)C / (½(R1 + R2)C + ½(R1C2 + R2C1)).
RCEigenvalues rc_eigenvalues(const RCCircuitSpec& spec);

/// Joules, or multiples of k_B·T2.
enum class EnergyUnit { kJoule, kThermalT2 };

/// Limit density of Q_t on the grid (given in `unit`), with λ±: the
/// exponential law at T1 = T2 and the two-dimensional angular form
/// otherwise. Densities are per `unit`.
std::vector<vargamma::DensityPoint> rc_limit_density(const RCCircuitSpec& spec, std::span<const double> grid,
                                                     EnergyUnit unit = EnergyUnit::kJoule);

/// Law with eigenvalues λ± of the closed form.
vargamma::VarianceGammaLaw rc_limit_law(const RCCircuitSpec& spec);

}  // namespace vgnet::networks
