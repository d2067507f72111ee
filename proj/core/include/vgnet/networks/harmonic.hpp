#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/networks/units.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"

namespace vgnet::networks {

/// Finite harmonic network (G, m, ω, C) with Langevin reservoirs (γ, T).
/// States are ordered (p, q), each block indexed by vertex.
struct NetworkSpec {
  std::vector<double> masses;
  std::vector<double> frequencies;
  linalg::SymMatrix coupling;
  std::vector<double> gammas;        // ≥ 0; 0 means no reservoir
  std::vector<double> temperatures;  // > 0
  double k_b = kBoltzmannSI;

  std::size_t size() const noexcept { return masses.size(); }
  /// Throws std::invalid_argument on inconsistent sizes, nonpositive masses,
  /// frequencies or temperatures, negative γ, or mω² + C not positive definite.
  void validate() const;
  /// V = mω² + C.
  linalg::SymMatrix potential() const;
};

/// Vertex subset G0, stored sorted. Must be nonempty, in range and free of
/// duplicates; G0 = G is allowed here (see check_nontrivial).
class SubnetworkSelection {
 public:
  SubnetworkSelection(std::vector<std::size_t> vertices, std::size_t network_size);

  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
  std::size_t network_size() const noexcept { return network_size_; }
  std::vector<std::size_t> complement() const;
  bool contains(std::size_t x) const;

 private:
  std::vector<std::size_t> vertices_;
  std::size_t network_size_;
};

/// Throws std::invalid_argument unless G0 is a proper subset with some
/// C_xy ≠ 0 for x ∈ G0, y ∉ G0.
void check_nontrivial(const NetworkSpec& spec, const SubnetworkSelection& sel);

/// A = [[−γ, −V], [m⁻¹, 0]], B = diag((2γ m k_B T)^{1/2}) on the momentum
/// rows (2|G| × |G|). Requires some γ_x > 0.
ou::LinearSDEModel langevin_model(const NetworkSpec& spec);

/// k_B T · diag(m, V⁻¹).
linalg::SymMatrix equilibrium_covariance(const NetworkSpec& spec, double temperature);

/// K_{G0}: 1/(2m_x) on the momenta of G0.
ou::QuadraticObservable kinetic_observable(const NetworkSpec& spec, const SubnetworkSelection& sel);

/// H_{G0}: 1/(2m_x) on the momenta of G0 and ½V_{G0} (principal submatrix
/// of V) on the positions of G0.
ou::QuadraticObservable total_energy_observable(const NetworkSpec& spec, const SubnetworkSelection& sel);

/// ϑ = λ_max(V0^{−1/2} C01 V1⁻¹ C10 V0^{−1/2}) with 0 = G0, 1 = its
/// complement. Requires a proper subset.
double schur_theta(const NetworkSpec& spec, const SubnetworkSelection& sel);

struct FirstLawReport {
  double w_ext = 0.0;
  double w_int = 0.0;
  double delta_h = 0.0;  // ΔH_{G0}
  double delta_k = 0.0;  // ΔK_{G0}
  double delta_v = 0.0;  // ΔV_{G0}
  double energy_scale = 0.0;  // H of the initial state
  /// Largest of the three identity defects divided by the energy scale.
  double max_relative_defect = 0.0;
  /// Difference between the work integrals at `steps` and 2·`steps`
  /// panels, relative to the energy scale.
  double quadrature_estimate = 0.0;
  /// False when the quadrature estimate exceeds 1e−7; more steps needed.
  bool resolved = true;
};

/// Integrates the external and internal work on G0 along the exact
/// Hamiltonian flow (γ ignored) from `initial` = (p, q) over [0, t], with
/// `steps` panels of 8-point Gauss–Legendre.
FirstLawReport first_law_check(const NetworkSpec& spec, const SubnetworkSelection& sel,
                               std::span<const double> initial, double t, std::size_t steps);

}  // namespace vgnet::networks
