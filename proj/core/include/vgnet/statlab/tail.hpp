#pragma once

#include <cstddef>
#include <span>

#include "vgnet/vargamma/density.hpp"

namespace vgnet::statlab {

struct TailFit {
  double slope = 0.0;      // d log(·)/ds; theory −1/λ_n
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of log f over grid points with s in [lo, hi].
/// Throws std::invalid_argument with fewer than 100 usable points.
TailFit tail_slope(std::span<const vargamma::DensityPoint> grid, double lo, double hi);

/// Least-squares slope of the log empirical survival function of |Q|,
/// evaluated at the sample points with |Q| in [lo, hi]. Same 100-point rule.
TailFit tail_slope_sample(std::span<const double> values, double lo, double hi);

}  // namespace vgnet::statlab
