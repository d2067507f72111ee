#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cli/config.hpp"

namespace vgnet::cli {

/// Main output (to --out or stdout) plus side files written next to --out
/// as <out><suffix>.
struct CommandResult {
  int exit_code = 0;
  std::string primary;
  std::vector<std::pair<std::string, std::string>> side_files;
};

/// CSV "s,f" of the limit density on the grid.
CommandResult cmd_vg_density(const RunConfig& config, const SpecDocument& spec);
/// JSON report of the circuit; with --out also .density.csv and, when
/// --count is given, a Monte Carlo .histogram.csv (k_B·T2 units).
CommandResult cmd_rc(const RunConfig& config, const SpecDocument& spec);
/// JSON report of the selected observable's limit law; with --out also
/// .density.csv.
CommandResult cmd_network(const RunConfig& config, const SpecDocument& spec);
/// CSV of per-t LDP estimates against theory.
CommandResult cmd_ldp(const RunConfig& config, const SpecDocument& spec);
/// Cross-oracle checks; exit 3 on numerical, 4 on statistical failures.
CommandResult cmd_selftest(const RunConfig& config);

}  // namespace vgnet::cli
