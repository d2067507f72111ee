#include "vgnet/networks/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vgnet/linalg/eigen.hpp"
#include "vgnet/numeric/quadrature.hpp"

namespace vgnet::networks {

using linalg::Matrix;
using linalg::SymMatrix;

UnitSystem parse_units(std::string_view name) {
  if (name == "si") return UnitSystem::kSI;
  if (name == "reduced") return UnitSystem::kReduced;
  std::ostringstream msg;
  msg << "unknown unit system '" << name << "' (expected si or reduced)";
  throw std::invalid_argument(msg.str());
}

std::string_view to_string(UnitSystem units) { return units == UnitSystem::kSI ? "si" : "reduced"; }

void NetworkSpec::validate() const {
  const std::size_t n = size();
  if (n == 0) throw std::invalid_argument("NetworkSpec: no vertices");
  if (frequencies.size() != n || gammas.size() != n || temperatures.size() != n || coupling.dim() != n) {
    std::ostringstream msg;
    msg << "NetworkSpec: inconsistent sizes (masses " << n << ", frequencies " << frequencies.size()
        << ", gammas " << gammas.size() << ", temperatures " << temperatures.size() << ", coupling "
        << coupling.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!(masses[x] > 0.0) || !std::isfinite(masses[x])) throw std::invalid_argument("NetworkSpec: masses must be positive");
    if (!(frequencies[x] > 0.0) || !std::isfinite(frequencies[x]))
      throw std::invalid_argument("NetworkSpec: frequencies must be positive");
    if (!(gammas[x] >= 0.0) || !std::isfinite(gammas[x])) throw std::invalid_argument("NetworkSpec: gammas must be >= 0");
    if (!(temperatures[x] > 0.0) || !std::isfinite(temperatures[x]))
      throw std::invalid_argument("NetworkSpec: temperatures must be positive");
  }
  if (!(k_b > 0.0) || !std::isfinite(k_b)) throw std::invalid_argument("NetworkSpec: k_B must be positive");
  if (!linalg::is_positive_definite(potential()))
    throw std::invalid_argument("NetworkSpec: m*omega^2 + C is not positive definite");
}

SymMatrix NetworkSpec::potential() const {
  Matrix v = coupling.matrix();
  for (std::size_t x = 0; x < size(); ++x) v(x, x) += masses[x] * frequencies[x] * frequencies[x];
  return SymMatrix(std::move(v));
}

SubnetworkSelection::SubnetworkSelection(std::vector<std::size_t> vertices, std::size_t network_size)
    : vertices_(std::move(vertices)), network_size_(network_size) {
  if (vertices_.empty()) throw std::invalid_argument("SubnetworkSelection: empty selection");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("SubnetworkSelection: duplicate vertex");
  if (vertices_.back() >= network_size_) {
    std::ostringstream msg;
    msg << "SubnetworkSelection: vertex " << vertices_.back() << " out of range for " << network_size_
        << " vertices";
    throw std::invalid_argument(msg.str());
  }
}

std::vector<std::size_t> SubnetworkSelection::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < network_size_; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

bool SubnetworkSelection::contains(std::size_t x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

namespace {

void check_selection(const NetworkSpec& spec, const SubnetworkSelection& sel) {
  if (sel.network_size() != spec.size())
    throw std::invalid_argument("selection was made for a network of a different size");
}

}  // namespace

void check_nontrivial(const NetworkSpec& spec, const SubnetworkSelection& sel) {
  check_selection(spec, sel);
  const auto rest = sel.complement();
  if (rest.empty()) throw std::invalid_argument("subnetwork selection must be a proper subset of the network");
  for (std::size_t x : sel.vertices())
    for (std::size_t y : rest)
      if (spec.coupling(x, y) != 0.0) return;
  throw std::invalid_argument("subnetwork is not coupled to its complement (C_xy = 0 across the boundary)");
}

ou::LinearSDEModel langevin_model(const NetworkSpec& spec) {
  spec.validate();
  const std::size_t n = spec.size();
  if (std::none_of(spec.gammas.begin(), spec.gammas.end(), [](double g) { return g > 0.0; }))
    throw std::invalid_argument("langevin_model: at least one relaxation rate must be positive");
  const SymMatrix v = spec.potential();
  Matrix a(2 * n, 2 * n);
  Matrix b(2 * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    a(x, x) = -spec.gammas[x];
    for (std::size_t y = 0; y < n; ++y) a(x, n + y) = -v(x, y);
    a(n + x, x) = 1.0 / spec.masses[x];
    b(x, x) = std::sqrt(2.0 * spec.gammas[x] * spec.masses[x] * spec.k_b * spec.temperatures[x]);
  }
  return ou::build_model(a, b);
}

SymMatrix equilibrium_covariance(const NetworkSpec& spec, double temperature) {
  spec.validate();
  const std::size_t n = spec.size();
  const double kt = spec.k_b * temperature;
  const Matrix vinv = linalg::inverse(spec.potential().matrix());
  Matrix m(2 * n, 2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    m(x, x) = kt * spec.masses[x];
    for (std::size_t y = 0; y < n; ++y) m(n + x, n + y) = kt * vinv(x, y);
  }
  return SymMatrix::symmetrized(m);
}

ou::QuadraticObservable kinetic_observable(const NetworkSpec& spec, const SubnetworkSelection& sel) {
  check_selection(spec, sel);
  const std::size_t n = spec.size();
  Matrix l(2 * n, 2 * n);
  for (std::size_t x : sel.vertices()) l(x, x) = 0.5 / spec.masses[x];
  return ou::QuadraticObservable(SymMatrix(std::move(l)), ou::ObservableKind::kKinetic);
}

ou::QuadraticObservable total_energy_observable(const NetworkSpec& spec, const SubnetworkSelection& sel) {
  check_selection(spec, sel);
  const std::size_t n = spec.size();
  const SymMatrix v = spec.potential();
  Matrix l(2 * n, 2 * n);
  for (std::size_t x : sel.vertices()) {
    l(x, x) = 0.5 / spec.masses[x];
    for (std::size_t y : sel.vertices()) l(n + x, n + y) = 0.5 * v(x, y);
  }
  return ou::QuadraticObservable(SymMatrix(std::move(l)), ou::ObservableKind::kTotalEnergy);
}

double schur_theta(const NetworkSpec& spec, const SubnetworkSelection& sel) {
  check_selection(spec, sel);
  const auto g0 = sel.vertices();
  const auto g1 = sel.complement();
  if (g1.empty()) throw std::invalid_argument("schur_theta: selection must be a proper subset");
  const SymMatrix v = spec.potential();
  const SymMatrix v0 = v.select(g0);
  const SymMatrix v1 = v.select(g1);
  Matrix c01(g0.size(), g1.size());
  for (std::size_t i = 0; i < g0.size(); ++i)
    for (std::size_t j = 0; j < g1.size(); ++j) c01(i, j) = spec.coupling(g0[i], g1[j]);
  const Matrix r = linalg::sym_inv_sqrt(v0).matrix();
  const Matrix inner = r * c01 * linalg::inverse(v1.matrix()) * c01.transposed() * r;
  return linalg::sym_eigen(SymMatrix::symmetrized(inner)).values.back();
}

namespace {

// Exact Hamiltonian flow in normal-mode coordinates a = Wᵀ m^{1/2} q,
// b = Wᵀ m^{−1/2} p, where m^{−1/2} V m^{−1/2} = W diag(w²) Wᵀ.
class NormalModeFlow {
 public:
  NormalModeFlow(const NetworkSpec& spec, std::span<const double> initial) : n_(spec.size()) {
    sqrt_m_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) sqrt_m_[x] = std::sqrt(spec.masses[x]);
    const SymMatrix v = spec.potential();
    Matrix omega2(n_, n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) omega2(x, y) = v(x, y) / (sqrt_m_[x] * sqrt_m_[y]);
    const auto eig = linalg::sym_eigen(SymMatrix::symmetrized(omega2));
    w_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) w_[k] = std::sqrt(eig.values[k]);
    modes_ = eig.vectors;
    a0_.assign(n_, 0.0);
    b0_.assign(n_, 0.0);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t x = 0; x < n_; ++x) {
        a0_[k] += modes_(x, k) * sqrt_m_[x] * initial[n_ + x];
        b0_[k] += modes_(x, k) * initial[x] / sqrt_m_[x];
      }
  }

  // Positions q and velocities q̇ at time s.
  void state(double s, std::vector<double>& q, std::vector<double>& qdot) const {
    std::vector<double> a(n_), b(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const double c = std::cos(w_[k] * s), sn = std::sin(w_[k] * s);
      a[k] = a0_[k] * c + b0_[k] / w_[k] * sn;
      b[k] = -a0_[k] * w_[k] * sn + b0_[k] * c;
    }
    q.assign(n_, 0.0);
    qdot.assign(n_, 0.0);
    for (std::size_t x = 0; x < n_; ++x) {
      double y = 0.0, pi = 0.0;
      for (std::size_t k = 0; k < n_; ++k) {
        y += modes_(x, k) * a[k];
        pi += modes_(x, k) * b[k];
      }
      q[x] = y / sqrt_m_[x];
      qdot[x] = pi / sqrt_m_[x];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> sqrt_m_;
  std::vector<double> w_;
  Matrix modes_;
  std::vector<double> a0_, b0_;
};

struct Works {
  double ext = 0.0;
  double in = 0.0;
};

Works integrate_work(const NetworkSpec& spec, const SubnetworkSelection& sel, const NormalModeFlow& flow,
                     double t, std::size_t steps) {
  const auto& rule = numeric::gauss_legendre(8);
  const SymMatrix v = spec.potential();
  const std::size_t n = spec.size();
  const double h = t / static_cast<double>(steps);
  Works w;
  std::vector<double> q, qdot;
  for (std::size_t p = 0; p < steps; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      flow.state(mid + 0.5 * h * rule.nodes[i], q, qdot);
      double pe = 0.0, pi = 0.0;
      for (std::size_t x : sel.vertices()) {
        double fext = 0.0, fint = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
          if (sel.contains(y))
            fint -= v(x, y) * q[y];  // m_x ω_x² on the diagonal of V
          else
            fext -= spec.coupling(x, y) * q[y];
        }
        pe += fext * qdot[x];
        pi += fint * qdot[x];
      }
      w.ext += 0.5 * h * rule.weights[i] * pe;
      w.in += 0.5 * h * rule.weights[i] * pi;
    }
  }
  return w;
}

struct Energies {
  double k = 0.0;
  double v = 0.0;
};

Energies subnetwork_energy(const NetworkSpec& spec, const SubnetworkSelection& sel, std::span<const double> p,
                           std::span<const double> q) {
  const SymMatrix v = spec.potential();
  Energies e;
  for (std::size_t x : sel.vertices()) {
    e.k += 0.5 * p[x] * p[x] / spec.masses[x];
    for (std::size_t y : sel.vertices()) e.v += 0.5 * q[x] * v(x, y) * q[y];
  }
  return e;
}

}  // namespace

FirstLawReport first_law_check(const NetworkSpec& spec, const SubnetworkSelection& sel,
                               std::span<const double> initial, double t, std::size_t steps) {
  spec.validate();
  check_selection(spec, sel);
  const std::size_t n = spec.size();
  if (initial.size() != 2 * n) throw std::invalid_argument("first_law_check: initial state must be (p, q) of size 2|G|");
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("first_law_check: t must be >= 0");
  if (steps == 0) throw std::invalid_argument("first_law_check: steps must be positive");

  const NormalModeFlow flow(spec, initial);
  const Works coarse = integrate_work(spec, sel, flow, t, steps);
  const Works fine = integrate_work(spec, sel, flow, t, 2 * steps);

  std::vector<double> q, qdot;
  flow.state(t, q, qdot);
  std::vector<double> p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = spec.masses[x] * qdot[x];
  const auto e0 = subnetwork_energy(spec, sel, initial.subspan(0, n), initial.subspan(n, n));
  const auto e1 = subnetwork_energy(spec, sel, p, q);

  FirstLawReport r;
  r.w_ext = coarse.ext;
  r.w_int = coarse.in;
  r.delta_k = e1.k - e0.k;
  r.delta_v = e1.v - e0.v;
  r.delta_h = r.delta_k + r.delta_v;

  const SubnetworkSelection all = [&] {
    std::vector<std::size_t> every(n);
    for (std::size_t x = 0; x < n; ++x) every[x] = x;
    return SubnetworkSelection(every, n);
  }();
  const auto h0 = subnetwork_energy(spec, all, initial.subspan(0, n), initial.subspan(n, n));
  r.energy_scale = h0.k + h0.v;

  const double defect = std::max({std::abs(r.w_ext - r.delta_h), std::abs(r.w_ext + r.w_int - r.delta_k),
                                  std::abs(-r.w_int - r.delta_v)});
  const double quad = std::max(std::abs(coarse.ext - fine.ext), std::abs(coarse.in - fine.in));
  if (r.energy_scale > 0.0) {
    r.max_relative_defect = defect / r.energy_scale;
    r.quadrature_estimate = quad / r.energy_scale;
  }
  r.resolved = r.quadrature_estimate <= 1e-7;
  return r;
}

}  // namespace vgnet::networks
