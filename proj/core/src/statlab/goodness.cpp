#include "vgnet/statlab/goodness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vgnet/vargamma/cdf.hpp"

namespace vgnet::statlab {

double kolmogorov_cdf(double x) {
  if (!(x > 0.0)) return 0.0;
  if (x < 1.0) {
    // Dual series, fast for small x.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double s = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double odd = 2.0 * k - 1.0;
      s += std::exp(-odd * odd * pi2 / (8.0 * x * x));
    }
    return std::sqrt(2.0 * std::numbers::pi) / x * s;
  }
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    s += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return 1.0 - 2.0 * s;
}

double ks_critical(std::size_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("ks_critical: n must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_critical: alpha must be in (0, 1)");
  double lo = 0.1, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_cdf(mid) < 1.0 - alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

double ks_distance(std::span<const double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < v.size()) {
    // Ties: the empirical CDF jumps over the whole group at once.
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const double f = cdf(v[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(j) / n - f)});
    i = j;
  }
  return d;
}

double ks_distance(std::span<const double> values, const vargamma::VarianceGammaLaw& law) {
  const vargamma::VgCdf table(law);
  return ks_distance(values, [&](double s) { return table(s); });
}

double ks_distance(const EmpiricalSample& sample, const vargamma::VarianceGammaLaw& law) {
  return ks_distance(std::span<const double>(sample.values), law);
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
  if (bins == 0) throw std::invalid_argument("histogram: bins must be positive");
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("histogram: invalid range");
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<HistogramBin> out(bins);
  std::size_t inside = 0;
  for (double v : values) {
    if (!(v >= lo && v < hi)) continue;
    auto k = static_cast<std::size_t>((v - lo) / width);
    if (k >= bins) k = bins - 1;
    ++out[k].count;
    ++inside;
  }
  for (std::size_t k = 0; k < bins; ++k) {
    out[k].center = lo + (static_cast<double>(k) + 0.5) * width;
    out[k].density = inside == 0 ? 0.0 : static_cast<double>(out[k].count) / (static_cast<double>(inside) * width);
  }
  return out;
}

}  // namespace vgnet::statlab
