#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace vgnet::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "' in " + where);
  return obj.at(key);
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ConfigError(what + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(what + " must be finite");
  return x;
}

std::vector<double> numbers(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ConfigError(what + " must be a nonempty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

linalg::SymMatrix sym_matrix(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ConfigError(what + " must be a nonempty array of rows");
  const std::size_t n = v.size();
  linalg::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = numbers(v[i], what + "[" + std::to_string(i) + "]");
    if (row.size() != n) throw ConfigError(what + " must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  try {
    return linalg::SymMatrix(m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

VgInput parse_vg(const json& v) {
  reject_unknown(v, {"lambdas", "l", "m"}, "vg");
  VgInput in;
  if (v.contains("lambdas")) {
    if (v.contains("l") || v.contains("m")) throw ConfigError("vg: give either 'lambdas' or 'l' and 'm', not both");
    in.lambdas = numbers(v.at("lambdas"), "vg.lambdas");
  } else {
    in.l = sym_matrix(require(v, "l", "vg"), "vg.l");
    in.m = sym_matrix(require(v, "m", "vg"), "vg.m");
  }
  return in;
}

networks::RCCircuitSpec parse_rc(const json& v) {
  reject_unknown(v, {"r1", "r2", "c", "c1", "c2", "t1", "t2"}, "rc_circuit");
  networks::RCCircuitSpec s;
  s.r1 = number(require(v, "r1", "rc_circuit"), "rc_circuit.r1");
  s.r2 = number(require(v, "r2", "rc_circuit"), "rc_circuit.r2");
  s.c = number(require(v, "c", "rc_circuit"), "rc_circuit.c");
  s.c1 = number(require(v, "c1", "rc_circuit"), "rc_circuit.c1");
  s.c2 = number(require(v, "c2", "rc_circuit"), "rc_circuit.c2");
  s.t1 = number(require(v, "t1", "rc_circuit"), "rc_circuit.t1");
  s.t2 = number(require(v, "t2", "rc_circuit"), "rc_circuit.t2");
  return s;
}

NetworkInput parse_network(const json& v) {
  reject_unknown(v, {"masses", "frequencies", "coupling", "gammas", "temperatures", "subnetwork", "observable"},
                 "network");
  NetworkInput in;
  in.spec.masses = numbers(require(v, "masses", "network"), "network.masses");
  in.spec.frequencies = numbers(require(v, "frequencies", "network"), "network.frequencies");
  in.spec.coupling = sym_matrix(require(v, "coupling", "network"), "network.coupling");
  in.spec.gammas = numbers(require(v, "gammas", "network"), "network.gammas");
  in.spec.temperatures = numbers(require(v, "temperatures", "network"), "network.temperatures");
  const json& sub = require(v, "subnetwork", "network");
  if (!sub.is_array() || sub.empty()) throw ConfigError("network.subnetwork must be a nonempty array of vertices");
  for (const auto& x : sub) {
    if (!x.is_number_unsigned()) throw ConfigError("network.subnetwork entries must be nonnegative integers");
    in.subnetwork.push_back(x.get<std::size_t>());
  }
  if (v.contains("observable")) {
    if (!v.at("observable").is_string()) throw ConfigError("network.observable must be a string");
    in.observable = v.at("observable").get<std::string>();
    if (in.observable != "kinetic" && in.observable != "total")
      throw ConfigError("network.observable must be 'kinetic' or 'total'");
  }
  return in;
}

}  // namespace

void SpecDocument::set_units(networks::UnitSystem u) {
  units = u;
  rc.k_b = networks::boltzmann_constant(u);
  network.spec.k_b = networks::boltzmann_constant(u);
}

SpecDocument parse_spec(const json& doc) {
  reject_unknown(doc, {"units", "seed", "vg", "rc_circuit", "network"}, "spec");
  SpecDocument s;
  s.raw = doc;
  const json& units = require(doc, "units", "spec");
  if (!units.is_string()) throw ConfigError("spec.units must be \"si\" or \"reduced\"");
  try {
    s.units = networks::parse_units(units.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ConfigError("spec.seed must be a nonnegative integer");
    s.seed = doc.at("seed").get<std::uint64_t>();
  }
  const int kinds = static_cast<int>(doc.contains("vg")) + static_cast<int>(doc.contains("rc_circuit")) +
                    static_cast<int>(doc.contains("network"));
  if (kinds != 1) throw ConfigError("spec must contain exactly one of 'vg', 'rc_circuit', 'network'");
  if (doc.contains("vg")) {
    s.kind = SpecKind::kVg;
    s.vg = parse_vg(doc.at("vg"));
  } else if (doc.contains("rc_circuit")) {
    s.kind = SpecKind::kRcCircuit;
    s.rc = parse_rc(doc.at("rc_circuit"));
  } else {
    s.kind = SpecKind::kNetwork;
    s.network = parse_network(doc.at("network"));
  }
  s.set_units(s.units);
  return s;
}

SpecDocument load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_spec(doc);
}

std::vector<double> Grid::points() const {
  std::vector<double> p;
  if (n == 1) return {lo};
  for (std::size_t k = 0; k < n; ++k) p.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1));
  return p;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  char c1 = 0, c2 = 0;
  long long n = 0;
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  if (!(in >> g.lo >> c1 >> g.hi >> c2 >> n) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw ConfigError("--grid must look like min:max:n, got '" + text + "'");
  if (n < 1) throw ConfigError("--grid: n must be at least 1");
  g.n = static_cast<std::size_t>(n);
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || (g.n > 1 && !(g.lo < g.hi)))
    throw ConfigError("--grid: need finite min < max");
  return g;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream one(item);
    one.imbue(std::locale::classic());
    double x = 0.0;
    if (!(one >> x) || !(one >> std::ws).eof() || !std::isfinite(x))
      throw ConfigError("not a number: '" + item + "' in '" + text + "'");
    out.push_back(x);
  }
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

nlohmann::json manifest(const RunConfig& c, const SpecDocument* spec) {
  json m;
  m["tool"] = "vgnet";
  m["command"] = c.command;
  m["spec_path"] = c.spec_path;
  m["spec"] = spec ? spec->raw : json(nullptr);
  m["out"] = c.out;
  m["seed"] = c.seed;
  m["count"] = c.count;
  m["t"] = c.t;
  m["t_list"] = c.t_list;
  m["grid"] = c.grid ? json{{"min", c.grid->lo}, {"max", c.grid->hi}, {"n", c.grid->n}} : json(nullptr);
  const auto units = spec ? spec->units : c.units.value_or(networks::UnitSystem::kSI);
  m["units"] = std::string(networks::to_string(units));
  m["workers"] = c.workers;
  m["window"] = c.window ? json{c.window->first, c.window->second} : json(nullptr);
  m["tol_scale"] = c.tol_scale;
  return m;
}

}  // namespace vgnet::cli
