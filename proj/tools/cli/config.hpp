#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/networks/harmonic.hpp"
#include "vgnet/networks/rc_circuit.hpp"
#include "vgnet/networks/units.hpp"

namespace vgnet::cli {

/// Invalid flags or spec file; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SpecKind { kVg, kRcCircuit, kNetwork };

struct VgInput {
  std::vector<double> lambdas;  // either this ...
  std::optional<linalg::SymMatrix> l;  // ... or both matrices
  std::optional<linalg::SymMatrix> m;
};

struct NetworkInput {
  networks::NetworkSpec spec;
  std::vector<std::size_t> subnetwork;
  std::string observable = "kinetic";  // "kinetic" | "total"
};

/// Parsed spec document:
///   {"units": "si"|"reduced", "seed": n (optional), and exactly one of
///    "vg": {"lambdas": [...]} | {"l": [[...]], "m": [[...]]},
///    "rc_circuit": {"r1", "r2", "c", "c1", "c2", "t1", "t2"},
///    "network": {"masses", "frequencies", "coupling", "gammas",
///                "temperatures", "subnetwork", "observable" (optional)}}
/// Unknown keys are rejected at every level.
struct SpecDocument {
  networks::UnitSystem units = networks::UnitSystem::kSI;
  std::optional<std::uint64_t> seed;
  SpecKind kind = SpecKind::kVg;
  VgInput vg;
  networks::RCCircuitSpec rc;
  NetworkInput network;
  nlohmann::json raw;

  /// Switches the unit system and the k_B stored in the physical specs.
  void set_units(networks::UnitSystem u);
};

SpecDocument parse_spec(const nlohmann::json& doc);
SpecDocument load_spec(const std::string& path);

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
  std::vector<double> points() const;
};

/// "min:max:n" with min < max and n ≥ 2 (n = 1 gives the single point min).
Grid parse_grid(const std::string& text);
/// Comma-separated numbers.
std::vector<double> parse_number_list(const std::string& text);

struct RunConfig {
  std::string command;
  std::string spec_path;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t count = 100000;
  bool count_given = false;
  double t = 1.0;
  std::vector<double> t_list;
  std::optional<Grid> grid;
  std::optional<networks::UnitSystem> units;
  std::size_t workers = 1;
  std::optional<std::pair<double, double>> window;
  double tol_scale = 1.0;
};

/// Everything needed to reproduce the run.
nlohmann::json manifest(const RunConfig& config, const SpecDocument* spec);

}  // namespace vgnet::cli
