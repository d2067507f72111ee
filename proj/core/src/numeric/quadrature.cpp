#include "vgnet/numeric/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace vgnet::numeric {

namespace {

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1.0, p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double pk = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = pk;
  }
  return {p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
}

GaussLegendreRule compute_rule(std::size_t n) {
  GaussLegendreRule r{std::vector<double>(n), std::vector<double>(n)};
  if (n == 1) {
    r.weights[0] = 2.0;
    return r;
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[n - 1 - i] = x;
    r.nodes[i] = -x;
    r.weights[n - 1 - i] = w;
    r.weights[i] = w;
  }
  if (n % 2 == 1) {
    const double dp = legendre(n, 0.0).second;
    r.weights[n / 2] = 2.0 / (dp * dp);
  }
  return r;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::mutex mu;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, std::size_t n,
                    std::size_t panels) {
  if (panels == 0) throw std::invalid_argument("integrate_gl: panels must be positive");
  const auto& rule = gauss_legendre(n);
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
    total += 0.5 * h * s;
  }
  return total;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, unsigned max_depth) {
  QuadResult r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, max_depth,
                                                                          rel_tol, &r.error);
  return r;
}

QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                               double rel_tol) {
  QuadResult r;
  if (std::isinf(b)) {
    thread_local boost::math::quadrature::exp_sinh<double> es;
    auto shifted = [&](double x) { return f(a + x); };
    r.value = es.integrate(shifted, 0.0, std::numeric_limits<double>::infinity(), rel_tol, &r.error);
  } else {
    thread_local boost::math::quadrature::tanh_sinh<double> ts;
    auto g = [&](double x) { return f(x); };
    r.value = ts.integrate(g, a, b, rel_tol, &r.error);
  }
  return r;
}

}  // namespace vgnet::numeric
