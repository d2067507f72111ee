#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/output.hpp"
#include "vgnet/networks/harmonic.hpp"
#include "vgnet/networks/rc_circuit.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"
#include "vgnet/statlab/goodness.hpp"
#include "vgnet/statlab/ldp.hpp"
#include "vgnet/statlab/sample.hpp"
#include "vgnet/vargamma/density.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::cli {

namespace {

using nlohmann::json;

json to_json(const linalg::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const linalg::SymMatrix& m) { return to_json(m.matrix()); }

std::string list_text(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_number(v[i]);
  return s + "]";
}

std::string law_meta(const vargamma::VarianceGammaLaw& law) {
  std::string meta = "lambdas=" + list_text(law.lambdas());
  if (law.dim() == 2) {
    const auto p = law.two_dim_params();
    meta += "; epsilon=" + format_number(p.epsilon) + "; theta=" + format_number(p.theta);
  }
  return meta;
}

void require_kind(const SpecDocument& spec, std::initializer_list<SpecKind> kinds, const std::string& command) {
  if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end())
    throw ConfigError(command + ": unsupported spec kind for this command");
}

struct NetworkSetup {
  networks::SubnetworkSelection selection;
  ou::QuadraticObservable observable;
};

NetworkSetup network_setup(const NetworkInput& in) {
  in.spec.validate();
  networks::SubnetworkSelection sel(in.subnetwork, in.spec.size());
  auto obs = in.observable == "total" ? networks::total_energy_observable(in.spec, sel)
                                      : networks::kinetic_observable(in.spec, sel);
  return {sel, obs};
}

vargamma::VarianceGammaLaw vg_law(const VgInput& in) {
  if (!in.lambdas.empty()) return vargamma::VarianceGammaLaw(in.lambdas);
  return vargamma::make_vg(*in.l, *in.m);
}

std::vector<vargamma::DensityPoint> profile(const vargamma::VarianceGammaLaw& law, std::vector<double> grid) {
  // The n = 1 density diverges at 0.
  if (law.dim() == 1) grid.erase(std::remove(grid.begin(), grid.end(), 0.0), grid.end());
  return vargamma::density_profile(law, grid);
}

std::string density_csv(const std::vector<vargamma::DensityPoint>& pts, const std::string& meta) {
  std::vector<std::vector<double>> rows;
  for (const auto& p : pts) rows.push_back({p.s, p.f});
  std::ostringstream os;
  write_csv(os, "s,f", meta, rows);
  return os.str();
}

std::vector<double> default_grid(const RunConfig& c, double half_width) {
  if (c.grid) return c.grid->points();
  return Grid{-half_width, half_width, 401}.points();
}

std::string units_name(const SpecDocument& spec) { return std::string(networks::to_string(spec.units)); }

json model_json(const ou::LinearSDEModel& model) {
  return {{"spectral_abscissa", model.spectral_abscissa()},
          {"controllable", model.controllable()},
          {"controllability_rank", model.controllability_rank()},
          {"lyapunov_residual", model.lyapunov_residual()},
          {"m_positive_definite", model.m_positive_definite()},
          {"warnings", model.warnings()}};
}

json monte_carlo(const RunConfig& c, const ou::LinearSDEModel& model, const ou::QuadraticObservable& obs,
                 const vargamma::VarianceGammaLaw& law, std::vector<double>* values) {
  auto sample = statlab::sample_qt(model, obs, c.t, c.count, c.seed, c.workers);
  const double ks = statlab::ks_distance(sample, law);
  double mean = 0.0, sq = 0.0;
  for (double v : sample.values) {
    mean += v;
    sq += v * v;
  }
  const double n = static_cast<double>(sample.count());
  mean /= n;
  const double sd = std::sqrt(std::max(0.0, sq / n - mean * mean));
  if (values) *values = std::move(sample.values);
  return {{"t", c.t},
          {"count", c.count},
          {"seed", c.seed},
          {"workers", c.workers},
          {"ks_to_limit", ks},
          {"ks_critical_1pct", statlab::ks_critical(c.count, 0.01)},
          {"mean", mean},
          {"mean_z", sd > 0.0 ? mean / (sd / std::sqrt(n)) : 0.0}};
}

}  // namespace

CommandResult cmd_vg_density(const RunConfig& c, const SpecDocument& spec) {
  CommandResult r;
  if (spec.kind == SpecKind::kRcCircuit) {
    const auto law = networks::rc_limit_law(spec.rc);
    const auto grid = default_grid(c, 10.0);
    const auto pts = networks::rc_limit_density(spec.rc, grid, networks::EnergyUnit::kThermalT2);
    r.primary = density_csv(pts, law_meta(law) + "; s_unit=k_B*T2; units=" + units_name(spec));
    return r;
  }
  const auto law = spec.kind == SpecKind::kVg
                       ? vg_law(spec.vg)
                       : ou::limit_law(networks::langevin_model(spec.network.spec),
                                       network_setup(spec.network).observable);
  const auto pts = profile(law, default_grid(c, 10.0 * law.lambda_max()));
  r.primary = density_csv(pts, law_meta(law) + "; units=" + units_name(spec));
  return r;
}

CommandResult cmd_rc(const RunConfig& c, const SpecDocument& spec) {
  require_kind(spec, {SpecKind::kRcCircuit}, "rc");
  const auto& rc = spec.rc;
  const auto model = networks::rc_model(rc);
  const auto obs = networks::rc_heat_observable(rc);
  const auto ev = networks::rc_eigenvalues(rc);
  const auto law = networks::rc_limit_law(rc);
  const auto numeric = ou::limit_law(model, obs);
  const double unit = rc.k_b * rc.t2;

  json report{{"units", units_name(spec)},
              {"energy_unit", "J if units=si, k_B=1 otherwise"},
              {"a", to_json(model.a())},
              {"b", to_json(model.b())},
              {"m_stat", to_json(model.m_stat())},
              {"l", to_json(obs.l())},
              {"coupling_Lambda", ev.coupling},
              {"lambda_minus", ev.lambda_minus},
              {"lambda_plus", ev.lambda_plus},
              {"lambdas_numeric", numeric.lambdas()},
              {"epsilon", ev.epsilon},
              {"theta", ev.theta},
              {"epsilon_from_lambdas", ev.epsilon_from_lambdas},
              {"k_b_t2", unit},
              {"model", model_json(model)}};

  CommandResult r;
  std::vector<double> values;
  if (c.count_given) report["monte_carlo"] = monte_carlo(c, model, obs, law, c.out.empty() ? nullptr : &values);

  if (!c.out.empty()) {
    const auto grid = default_grid(c, 10.0);
    const auto pts = networks::rc_limit_density(rc, grid, networks::EnergyUnit::kThermalT2);
    r.side_files.emplace_back(".density.csv",
                              density_csv(pts, law_meta(law) + "; s_unit=k_B*T2; units=" + units_name(spec)));
    if (c.count_given) {
      for (double& v : values) v /= unit;
      const double lo = grid.front(), hi = grid.back();
      const auto h = statlab::histogram(values, 60, lo, hi);
      std::vector<double> centers;
      for (const auto& b : h) centers.push_back(b.center);
      const auto limit = networks::rc_limit_density(rc, centers, networks::EnergyUnit::kThermalT2);
      std::vector<std::vector<double>> rows;
      for (std::size_t k = 0; k < h.size(); ++k)
        rows.push_back({h[k].center, h[k].density, static_cast<double>(h[k].count), limit[k].f});
      std::ostringstream os;
      write_csv(os, "center,density,count,f_limit",
                "t=" + format_number(c.t) + "; count=" + std::to_string(c.count) + "; seed=" + std::to_string(c.seed) +
                    "; s_unit=k_B*T2",
                rows);
      r.side_files.emplace_back(".histogram.csv", os.str());
    }
  }
  r.primary = report.dump(2) + "\n";
  return r;
}

CommandResult cmd_network(const RunConfig& c, const SpecDocument& spec) {
  require_kind(spec, {SpecKind::kNetwork}, "network");
  const auto& in = spec.network;
  const auto setup = network_setup(in);
  networks::check_nontrivial(in.spec, setup.selection);
  const auto model = networks::langevin_model(in.spec);
  const auto law = ou::limit_law(model, setup.observable);
  const double theta = networks::schur_theta(in.spec, setup.selection);
  const auto& temps = in.spec.temperatures;
  const bool equilibrium = std::all_of(temps.begin(), temps.end(), [&](double t) { return t == temps.front(); });

  json report{{"units", units_name(spec)},
              {"observable", in.observable},
              {"subnetwork", setup.selection.vertices()},
              {"size", in.spec.size()},
              {"equilibrium", equilibrium},
              {"lambdas", law.lambdas()},
              {"lambda_max", law.lambda_max()},
              {"rate_slope", 1.0 / law.lambda_max()},
              {"schur_theta", theta},
              {"model", model_json(model)}};
  if (equilibrium) {
    const double kt = in.spec.k_b * temps.front();
    report["k_b_t"] = kt;
    report["predicted_lambda_max"] = in.observable == "total" ? kt / (1.0 - theta) : kt;
  }
  if (c.count_given) report["monte_carlo"] = monte_carlo(c, model, setup.observable, law, nullptr);

  CommandResult r;
  if (!c.out.empty()) {
    const auto pts = profile(law, default_grid(c, 10.0 * law.lambda_max()));
    r.side_files.emplace_back(".density.csv", density_csv(pts, law_meta(law) + "; units=" + units_name(spec)));
  }
  r.primary = report.dump(2) + "\n";
  return r;
}

CommandResult cmd_ldp(const RunConfig& c, const SpecDocument& spec) {
  if (!c.window) throw ConfigError("ldp: --window a,b is required");
  if (c.t_list.empty()) throw ConfigError("ldp: --t-list is required");
  statlab::LdpWindow window{c.window->first, c.window->second};
  std::string window_unit = "energy";

  std::optional<ou::LinearSDEModel> model;
  std::optional<ou::QuadraticObservable> obs;
  if (spec.kind == SpecKind::kVg) {
    // Sanity model: a = −I, b = √2·I (M = I) and L = diag(λ/2), so N = diag(λ).
    const auto law = vg_law(spec.vg);
    const std::size_t n = law.dim();
    model = ou::build_model(linalg::Matrix::identity(n) * -1.0, linalg::Matrix::identity(n) * std::sqrt(2.0));
    linalg::Matrix l(n, n);
    for (std::size_t k = 0; k < n; ++k) l(k, k) = 0.5 * law.lambdas()[k];
    obs = ou::QuadraticObservable(linalg::SymMatrix(l));
  } else if (spec.kind == SpecKind::kRcCircuit) {
    model = networks::rc_model(spec.rc);
    obs = networks::rc_heat_observable(spec.rc);
    const double unit = spec.rc.k_b * spec.rc.t2;
    window = {window.a * unit, window.b * unit};
    window_unit = "k_B*T2";
  } else {
    model = networks::langevin_model(spec.network.spec);
    obs = network_setup(spec.network).observable;
  }
  const auto est = statlab::ldp_scan(*model, *obs, window, c.t_list, c.count, c.seed, c.workers);
  std::vector<std::vector<double>> rows;
  for (const auto& p : est.points)
    rows.push_back({p.t, static_cast<double>(p.hits), p.probability, p.estimate, p.lower, p.upper,
                    p.lower_bound_only ? 1.0 : 0.0, est.theoretical});
  std::ostringstream os;
  write_csv(os, "t,hits,probability,estimate,lower,upper,lower_bound_only,theory",
            "window=(" + format_number(c.window->first) + "," + format_number(c.window->second) +
                "); window_unit=" + window_unit + "; count=" + std::to_string(c.count) +
                "; seed=" + std::to_string(c.seed) + "; workers=" + std::to_string(c.workers) +
                "; enough_hits=" + (est.enough_hits ? "1" : "0"),
            rows);
  CommandResult r;
  r.primary = os.str();
  return r;
}

}  // namespace vgnet::cli
