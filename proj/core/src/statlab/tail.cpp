#include "vgnet/statlab/tail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vgnet::statlab {

namespace {

constexpr std::size_t kMinPoints = 100;

TailFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("tail_slope: tail points have no spread");
  TailFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = x.size();
  return fit;
}

void require_points(std::size_t got) {
  if (got < kMinPoints) {
    std::ostringstream msg;
    msg << "tail_slope: only " << got << " tail points, need at least " << kMinPoints;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

TailFit tail_slope(std::span<const vargamma::DensityPoint> grid, double lo, double hi) {
  std::vector<double> x, y;
  for (const auto& p : grid) {
    if (p.s >= lo && p.s <= hi && p.f > 0.0) {
      x.push_back(p.s);
      y.push_back(std::log(p.f));
    }
  }
  require_points(x.size());
  return least_squares(x, y);
}

TailFit tail_slope_sample(std::span<const double> values, double lo, double hi) {
  std::vector<double> a;
  a.reserve(values.size());
  for (double v : values) a.push_back(std::abs(v));
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  std::vector<double> x, y;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < lo || a[i] > hi) continue;
    // Survival just above the i-th order statistic.
    const double surv = (n - static_cast<double>(i) - 1.0) / n;
    if (surv <= 0.0) continue;
    x.push_back(a[i]);
    y.push_back(std::log(surv));
  }
  require_points(x.size());
  return least_squares(x, y);
}

}  // namespace vgnet::statlab
