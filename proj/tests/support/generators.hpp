#pragma once

#include <cstddef>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/networks/harmonic.hpp"
#include "vgnet/networks/rc_circuit.hpp"
#include "vgnet/numeric/random.hpp"

// Random inputs for property tests. All draws come from the caller's engine.
namespace vgnet::testing {

double uniform(numeric::Rng& rng, double lo, double hi);
double log_uniform(numeric::Rng& rng, double lo, double hi);

linalg::Matrix random_matrix(numeric::Rng& rng, std::size_t rows, std::size_t cols);

/// −(SSᵀ + 0.5 I) + (K − Kᵀ): stable, generally non-normal.
linalg::Matrix random_stable(numeric::Rng& rng, std::size_t n);

/// SSᵀ + shift·I.
linalg::SymMatrix random_spd(numeric::Rng& rng, std::size_t n, double shift = 0.5);

/// Connected network: a path with random spring constants plus random
/// extra edges, coupling C = weighted graph Laplacian, reduced units
/// (k_B = 1). Every vertex is damped with probability 1/2, vertex 0 always.
/// With `equilibrium` all temperatures equal `temperature`.
networks::NetworkSpec random_network(numeric::Rng& rng, std::size_t n, bool equilibrium, double temperature = 1.0);

/// Nonempty proper subset touching the complement through the coupling.
networks::SubnetworkSelection random_selection(numeric::Rng& rng, const networks::NetworkSpec& spec);

/// Log-uniform resistances in [1e6, 1e9] Ω, capacitances in [1e−11, 1e−9] F,
/// temperatures uniform in [4, 400] K, SI units.
networks::RCCircuitSpec random_rc(numeric::Rng& rng);

/// R1 = R2 = 1e8 Ω, C = 1e−10 F, C1 = 6.8e−10 F, C2 = 4.2e−10 F.
networks::RCCircuitSpec figure2_circuit(double t1, double t2);

}  // namespace vgnet::testing
