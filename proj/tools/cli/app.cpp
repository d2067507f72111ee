#include "cli/app.hpp"

#include <cmath>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "vgnet/error.hpp"

namespace vgnet::cli {

namespace {

struct RawFlags {
  std::string spec, out, t_list, grid, units, window;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  double t = 1.0;
  std::size_t workers = 1;
  double tol_scale = 1.0;
};

void add_common(CLI::App* sub, RawFlags& f) {
  sub->add_option("--spec", f.spec, "JSON spec file");
  sub->add_option("--out", f.out, "output file (side files and the manifest are written next to it)");
  sub->add_option("--seed", f.seed, "64-bit seed (overrides the spec's seed; default 1)");
  sub->add_option("--count", f.count, "Monte Carlo sample count");
  sub->add_option("--t", f.t, "time horizon for sampling");
  sub->add_option("--t-list", f.t_list, "comma-separated increasing times (ldp)");
  sub->add_option("--grid", f.grid, "density grid min:max:n");
  sub->add_option("--units", f.units, "si | reduced (overrides the spec)");
  sub->add_option("--workers", f.workers, "sampling threads");
  sub->add_option("--window", f.window, "LDP window a,b");
  sub->add_option("--tol-scale", f.tol_scale, "multiplies every selftest tolerance");
}

RunConfig resolve(const std::string& command, const RawFlags& f) {
  RunConfig c;
  c.command = command;
  c.spec_path = f.spec;
  c.out = f.out;
  c.count_given = f.count.has_value();
  if (f.count) c.count = *f.count;
  if (c.count == 0) throw ConfigError("--count must be positive");
  if (!(f.t >= 0.0) || !std::isfinite(f.t)) throw ConfigError("--t must be a finite nonnegative number");
  c.t = f.t;
  if (!f.t_list.empty()) c.t_list = parse_number_list(f.t_list);
  if (!f.grid.empty()) c.grid = parse_grid(f.grid);
  if (!f.units.empty()) {
    try {
      c.units = networks::parse_units(f.units);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (f.workers == 0) throw ConfigError("--workers must be positive");
  c.workers = f.workers;
  if (!f.window.empty()) {
    const auto w = parse_number_list(f.window);
    if (w.size() != 2) throw ConfigError("--window needs exactly two numbers a,b");
    c.window = {w[0], w[1]};
  }
  c.tol_scale = f.tol_scale;
  if (f.seed) c.seed = *f.seed;
  return c;
}

int execute(const std::string& command, const RawFlags& flags, std::ostream& out, std::ostream& err) {
  RunConfig c = resolve(command, flags);
  std::optional<SpecDocument> spec;
  if (command != "selftest") {
    if (c.spec_path.empty()) throw ConfigError(command + ": --spec is required");
    spec = load_spec(c.spec_path);
    if (c.units) spec->set_units(*c.units);
    if (!flags.seed && spec->seed) c.seed = *spec->seed;
  }

  const std::string manifest_text = manifest(c, spec ? &*spec : nullptr).dump(2) + "\n";
  if (c.out.empty())
    err << manifest_text;
  else
    write_file(c.out + ".manifest.json", manifest_text);

  CommandResult r;
  if (command == "vg-density")
    r = cmd_vg_density(c, *spec);
  else if (command == "rc")
    r = cmd_rc(c, *spec);
  else if (command == "network")
    r = cmd_network(c, *spec);
  else if (command == "ldp")
    r = cmd_ldp(c, *spec);
  else
    r = cmd_selftest(c);

  if (c.out.empty()) {
    out << r.primary;
  } else {
    write_file(c.out, r.primary);
    for (const auto& [suffix, text] : r.side_files) write_file(c.out + suffix, text);
  }
  return r.exit_code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"vgnet: heat statistics of linear stochastic networks"};
  app.require_subcommand(1, 1);
  RawFlags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"vg-density", "limit density on a grid (CSV)"},
      {"rc", "RC circuit report (JSON) with optional density and histogram CSVs"},
      {"network", "harmonic network report (JSON) with optional density CSV"},
      {"ldp", "large-deviation scan (CSV)"},
      {"selftest", "cross-oracle checks"}};
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, flags, out, err);
  } catch (const ConfigError& e) {
    err << "vgnet: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "vgnet: invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "vgnet: invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "vgnet: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "vgnet: failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace vgnet::cli
