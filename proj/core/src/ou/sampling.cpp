#include "vgnet/ou/sampling.hpp"

#include <cmath>
#include <utility>
#include <stdexcept>

#include "vgnet/linalg/eigen.hpp"
#include "vgnet/linalg/expm.hpp"

namespace vgnet::ou {

using linalg::Matrix;
using linalg::SymMatrix;

namespace {

void apply(const Matrix& f, std::span<const double> z, std::span<double> out, bool accumulate) {
  for (std::size_t i = 0; i < f.rows(); ++i) {
    double s = accumulate ? out[i] : 0.0;
    for (std::size_t j = 0; j < f.cols(); ++j) s += f(i, j) * z[j];
    out[i] = s;
  }
}

}  // namespace

SymMatrix transition_covariance(const LinearSDEModel& model, double h) {
  if (!(h >= 0.0) || !std::isfinite(h)) throw std::invalid_argument("transition_covariance: h must be >= 0");
  const Matrix e = linalg::expm(model.a() * h);
  const Matrix& m = model.m_stat().matrix();
  return SymMatrix::symmetrized(m - e * m * e.transposed());
}

StationaryPairSampler::StationaryPairSampler(const LinearSDEModel& model, double t) : t_(t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("StationaryPairSampler: t must be >= 0");
  if (!model.m_positive_definite())
    throw std::invalid_argument("StationaryPairSampler: stationary covariance is not positive definite");
  factor_m_ = linalg::psd_factor(model.m_stat());
  propagator_ = linalg::expm(model.a() * t);
  if (t > 0.0) factor_cond_ = linalg::psd_factor(transition_covariance(model, t));
}

void StationaryPairSampler::draw(numeric::Rng& rng, std::span<double> x0, std::span<double> xt) const {
  const std::size_t n = dim();
  if (x0.size() != n || xt.size() != n) throw std::invalid_argument("StationaryPairSampler: wrong buffer size");
  numeric::NormalSource normal(rng);
  std::vector<double> z(n);
  normal.fill(z);
  apply(factor_m_, z, x0, false);
  if (t_ == 0.0) {
    std::copy(x0.begin(), x0.end(), xt.begin());
    return;
  }
  apply(propagator_, x0, xt, false);
  normal.fill(z);
  apply(factor_cond_, z, xt, true);
}

std::vector<StatePair> sample_stationary_pair(const LinearSDEModel& model, double t, numeric::Rng& rng,
                                              std::size_t count) {
  const StationaryPairSampler sampler(model, t);
  std::vector<StatePair> out(count);
  for (auto& p : out) {
    p.x0.resize(sampler.dim());
    p.xt.resize(sampler.dim());
    sampler.draw(rng, p.x0, p.xt);
  }
  return out;
}

std::vector<std::vector<double>> sample_path(const LinearSDEModel& model, std::span<const double> t_grid,
                                             numeric::Rng& rng) {
  if (t_grid.empty()) return {};
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (!std::isfinite(t_grid[k])) throw std::invalid_argument("sample_path: non-finite time");
    if (k > 0 && !(t_grid[k] > t_grid[k - 1])) throw std::invalid_argument("sample_path: grid is not ascending");
  }
  if (!model.m_positive_definite())
    throw std::invalid_argument("sample_path: stationary covariance is not positive definite");
  const std::size_t n = model.dim();
  numeric::NormalSource normal(rng);
  std::vector<double> z(n);
  std::vector<std::vector<double>> path(t_grid.size(), std::vector<double>(n));
  normal.fill(z);
  apply(linalg::psd_factor(model.m_stat()), z, path[0], false);

  // Steps equal to a cached one up to 1e−12 relative share its factors, so
  // uniform grids cost one expm.
  std::vector<std::pair<double, std::pair<Matrix, Matrix>>> cache;
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    const double h = t_grid[k] - t_grid[k - 1];
    const std::pair<Matrix, Matrix>* step = nullptr;
    for (const auto& [key, value] : cache)
      if (std::abs(key - h) <= 1e-12 * h) step = &value;
    if (step == nullptr) {
      if (cache.size() > 64) cache.clear();
      Matrix e = linalg::expm(model.a() * h);
      Matrix f = linalg::psd_factor(transition_covariance(model, h));
      cache.emplace_back(h, std::make_pair(std::move(e), std::move(f)));
      step = &cache.back().second;
    }
    apply(step->first, path[k - 1], path[k], false);
    normal.fill(z);
    apply(step->second, z, path[k], true);
  }
  return path;
}

}  // namespace vgnet::ou
