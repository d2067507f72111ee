#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vgnet::numeric {

/// Gauss–Legendre rule on [−1, 1]. Nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule computed by Newton iteration on P_n (n ≥ 1). Cached per n.
const GaussLegendreRule& gauss_legendre(std::size_t n);

/// ∫_a^b f with an n-point Gauss–Legendre rule on each of `panels` equal panels.
double integrate_gl(const std::function<double(double)>& f, double a, double b, std::size_t n,
                    std::size_t panels = 1);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimate reported by the adaptive rule
};

/// Adaptive Gauss–Kronrod (61-point) on a finite interval.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol = 1e-12, unsigned max_depth = 20);

/// tanh–sinh quadrature; tolerates endpoint singularities. Infinite b is
/// allowed (b = +inf).
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                               double rel_tol = 1e-12);

}  // namespace vgnet::numeric
