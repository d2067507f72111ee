#include "vgnet/vargamma/cdf.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "vgnet/numeric/quadrature.hpp"
#include "vgnet/vargamma/density.hpp"

namespace vgnet::vargamma {

namespace {

constexpr std::size_t kNodes = 14;
constexpr int kGradedLevels = 34;
constexpr double kRangeInLambda = 60.0;
constexpr double kPanelInLambda = 0.25;

}  // namespace

VgCdf::VgCdf(const VarianceGammaLaw& law) : lambda_max_(law.lambda_max()) {
  const double w = kPanelInLambda * lambda_max_;
  edges_.push_back(0.0);
  for (int k = kGradedLevels; k >= 1; --k) edges_.push_back(w * std::ldexp(1.0, -k));
  const auto uniform = static_cast<std::size_t>(std::lround(kRangeInLambda / kPanelInLambda));
  for (std::size_t k = 1; k <= uniform; ++k) edges_.push_back(w * static_cast<double>(k));

  std::optional<FourierDensity> fourier;
  if (law.dim() >= 3 && !law.isotropic()) fourier.emplace(law);
  auto f = [&](double s) { return fourier ? (*fourier)(s) : density(law, s); };

  const auto& rule = numeric::gauss_legendre(kNodes);
  // P_k at the nodes, used to project node values onto Legendre coefficients.
  std::vector<std::vector<double>> p(kNodes, std::vector<double>(kNodes));
  for (std::size_t i = 0; i < kNodes; ++i) {
    const double x = rule.nodes[i];
    p[0][i] = 1.0;
    if (kNodes > 1) p[1][i] = x;
    for (std::size_t k = 2; k < kNodes; ++k)
      p[k][i] = ((2.0 * k - 1.0) * x * p[k - 1][i] - (k - 1.0) * p[k - 2][i]) / static_cast<double>(k);
  }

  cumulative_.assign(1, 0.0);
  legendre_.reserve(edges_.size() - 1);
  for (std::size_t e = 0; e + 1 < edges_.size(); ++e) {
    const double a = edges_[e], b = edges_[e + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> fv(kNodes);
    for (std::size_t i = 0; i < kNodes; ++i) fv[i] = f(mid + half * rule.nodes[i]);
    std::vector<double> c(kNodes, 0.0);
    for (std::size_t k = 0; k < kNodes; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < kNodes; ++i) s += rule.weights[i] * fv[i] * p[k][i];
      c[k] = (2.0 * k + 1.0) / 2.0 * s;
    }
    legendre_.push_back(std::move(c));
    double mass = 0.0;
    for (std::size_t i = 0; i < kNodes; ++i) mass += rule.weights[i] * fv[i];
    cumulative_.push_back(cumulative_.back() + half * mass);
  }
  tail_mass_ = f(edges_.back()) * lambda_max_;
}

double VgCdf::partial(std::size_t panel, double s) const {
  const double a = edges_[panel], b = edges_[panel + 1];
  const double x = std::clamp((2.0 * s - a - b) / (b - a), -1.0, 1.0);
  // ∫_{−1}^x P_0 = x + 1, ∫_{−1}^x P_k = (P_{k+1}(x) − P_{k−1}(x))/(2k+1).
  const auto& c = legendre_[panel];
  std::vector<double> pv(kNodes + 1);
  pv[0] = 1.0;
  pv[1] = x;
  for (std::size_t k = 2; k <= kNodes; ++k)
    pv[k] = ((2.0 * k - 1.0) * x * pv[k - 1] - (k - 1.0) * pv[k - 2]) / static_cast<double>(k);
  double sum = c[0] * (x + 1.0);
  for (std::size_t k = 1; k < kNodes; ++k) sum += c[k] * (pv[k + 1] - pv[k - 1]) / (2.0 * k + 1.0);
  return 0.5 * (b - a) * sum;
}

double VgCdf::upper_tail(double s) const {
  if (!(s >= 0.0)) throw std::invalid_argument("VgCdf::upper_tail: s must be nonnegative");
  const double smax = edges_.back();
  if (s >= smax) return tail_mass_ * std::exp(-(s - smax) / lambda_max_);
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), s);
  const std::size_t panel = static_cast<std::size_t>(it - edges_.begin()) - 1;
  const double upto = cumulative_[panel] + partial(panel, s);
  return (cumulative_.back() - upto) + tail_mass_;
}

double VgCdf::operator()(double s) const {
  if (std::isnan(s)) throw std::invalid_argument("VgCdf: s is NaN");
  if (s == 0.0) return 0.5;
  const double a = std::abs(s);
  const double tail = std::isinf(a) ? 0.0 : upper_tail(a);
  const double value = s > 0.0 ? 1.0 - tail : tail;
  return std::clamp(value, 0.0, 1.0);
}

double cdf(const VarianceGammaLaw& law, double s) { return VgCdf(law)(s); }

}  // namespace vgnet::vargamma
