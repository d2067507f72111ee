#pragma once

#include <string_view>

namespace vgnet::networks {

/// SI uses the exact Boltzmann constant; reduced units set k_B = 1.
enum class UnitSystem { kSI, kReduced };

inline constexpr double kBoltzmannSI = 1.380649e-23;  // J/K

constexpr double boltzmann_constant(UnitSystem units) {
  return units == UnitSystem::kSI ? kBoltzmannSI : 1.0;
}

/// "si" or "reduced"; throws std::invalid_argument otherwise.
UnitSystem parse_units(std::string_view name);
std::string_view to_string(UnitSystem units);

}  // namespace vgnet::networks
