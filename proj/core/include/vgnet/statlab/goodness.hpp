#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "vgnet/statlab/sample.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::statlab {

/// Limiting Kolmogorov distribution P(√n·D_n ≤ x).
double kolmogorov_cdf(double x);

/// Asymptotic critical value c_α/√n with P(√n·D_n > c_α) = α.
double ks_critical(std::size_t n, double alpha);

/// sup_s |F_n(s) − F(s)| over the sorted sample.
double ks_distance(std::span<const double> values, const std::function<double(double)>& cdf);

/// KS distance to the tabulated variance-gamma CDF.
double ks_distance(const EmpiricalSample& sample, const vargamma::VarianceGammaLaw& law);
double ks_distance(std::span<const double> values, const vargamma::VarianceGammaLaw& law);

struct HistogramBin {
  double center = 0.0;
  double density = 0.0;
  std::size_t count = 0;
};

/// `bins` equal bins on [lo, hi); densities are normalized by the number of
/// values inside the range, so they integrate to 1 over it.
std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

}  // namespace vgnet::statlab
