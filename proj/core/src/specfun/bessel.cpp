#include "vgnet/specfun/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace vgnet::specfun {

namespace {

constexpr double kUnderflowX = 700.0;

void check_args(double nu, double x, const char* who) {
  if (!std::isfinite(nu) || nu < 0.0) {
    std::ostringstream msg;
    msg << who << ": order must be finite and nonnegative, got " << nu;
    throw std::domain_error(msg.str());
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << who << ": argument must be positive and finite, got " << x;
    throw std::domain_error(msg.str());
  }
}

double log_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// Log of the integrand, even in t.
double log_integrand(double nu, double x, double t) { return -x * std::cosh(t) + log_cosh(nu * t); }

// Maximizer of the log integrand on t ≥ 0: x sinh t = ν tanh(νt).
double peak_location(double nu, double x) {
  if (nu * nu <= x) return 0.0;
  double lo = 0.0;
  double hi = std::asinh(nu / x) + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (x * std::sinh(mid) < nu * std::tanh(nu * mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Distance from the peak at which the log integrand has dropped by 1,
// searched in direction dir (±1); capped by the distance to t = 0 on the left.
double drop_distance(double nu, double x, double tp, double gp, int dir) {
  const double limit = dir < 0 ? tp : 1e3;
  if (limit <= 0.0) return 1e300;
  double hi = std::min(0.125, limit);
  while (hi < limit && log_integrand(nu, x, tp + dir * hi) > gp - 1.0) hi = std::min(2.0 * hi, limit);
  if (log_integrand(nu, x, tp + dir * hi) > gp - 1.0) return 1e300;
  double lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (log_integrand(nu, x, tp + dir * mid) > gp - 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double asymptotic_auto(double nu, double x) {
  double sum = 1.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (4.0 * nu * nu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    if (next == 0.0) break;
    if (std::abs(next) > last) break;  // series starts diverging
    sum += next;
    term = next;
    last = std::abs(next);
    if (last < 1e-17 * std::abs(sum)) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * sum;
}

bool is_half_integer(double nu, int& m) {
  const double twice = 2.0 * nu;
  if (twice != std::floor(twice) || twice > 1e6) return false;
  const long k = static_cast<long>(twice);
  if (k % 2 == 0) return false;
  m = static_cast<int>((k - 1) / 2);
  return true;
}

}  // namespace

double asymptotic_coefficient(double nu, int k) {
  if (k < 0) throw std::domain_error("asymptotic_coefficient: k must be nonnegative");
  double a = 1.0;
  for (int j = 1; j <= k; ++j) a *= (4.0 * nu * nu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j);
  return a;
}

double bessel_k_asymptotic(double nu, double x, int terms) {
  check_args(nu, x, "bessel_k_asymptotic");
  if (terms < 1) throw std::domain_error("bessel_k_asymptotic: need at least one term");
  if (x < 10.0 * std::max(1.0, nu * nu)) {
    std::ostringstream msg;
    msg << "bessel_k_asymptotic: x = " << x << " below 10*max(1, nu^2) = "
        << 10.0 * std::max(1.0, nu * nu);
    throw std::domain_error(msg.str());
  }
  double sum = 0.0;
  double term = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) term *= (4.0 * nu * nu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    sum += term;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * sum;
}

double bessel_k_half_integer(int m, double x) {
  if (m < 0) throw std::domain_error("bessel_k_half_integer: m must be nonnegative");
  check_args(m + 0.5, x, "bessel_k_half_integer");
  // Work with e^{x} k_j(x) to keep the recurrence away from underflow.
  const double pi_half = 0.5 * std::numbers::pi;
  double k0 = pi_half / x;
  double k1 = pi_half * (1.0 + 1.0 / x) / x;
  double km = m == 0 ? k0 : k1;
  for (int j = 1; j < m; ++j) {
    const double k2 = k0 + (2.0 * j + 1.0) / x * k1;
    k0 = k1;
    k1 = k2;
    km = k2;
  }
  return std::sqrt(2.0 * x / std::numbers::pi) * km * std::exp(-x);
}

double bessel_k_integral(double nu, double x) {
  check_args(nu, x, "bessel_k_integral");
  const double tp = peak_location(nu, x);
  const double gp = log_integrand(nu, x, tp);
  const double width = std::min(drop_distance(nu, x, tp, gp, +1), drop_distance(nu, x, tp, gp, -1));
  const double h = std::min(0.25, width / 3.0);

  // Even integrand: ∫₀^∞ = h(½f(0) + Σ_{k≥1} f(kh)), spectrally accurate.
  double sum = 0.5 * std::exp(log_integrand(nu, x, 0.0) - gp);
  for (long k = 1;; ++k) {
    const double t = static_cast<double>(k) * h;
    const double term = std::exp(log_integrand(nu, x, t) - gp);
    sum += term;
    if (t > tp && term < 1e-18 * sum) break;
    if (k > 10000000) throw std::runtime_error("bessel_k_integral: runaway quadrature");
  }
  return std::exp(gp) * h * sum;
}

BesselValue bessel_k_checked(double nu, double x) {
  check_args(nu, x, "bessel_k");
  if (x > kUnderflowX) return {0.0, true};
  int m = 0;
  if (is_half_integer(nu, m)) return {bessel_k_half_integer(m, x), false};
  if (x > 20.0 + nu * nu) return {asymptotic_auto(nu, x), false};
  return {bessel_k_integral(nu, x), false};
}

double bessel_k(double nu, double x) { return bessel_k_checked(nu, x).value; }

}  // namespace vgnet::specfun
