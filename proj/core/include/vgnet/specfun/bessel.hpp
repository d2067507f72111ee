#pragma once

namespace vgnet::specfun {

struct BesselValue {
  double value = 0.0;
  bool underflow = false;  // x beyond the e^{−x} range; value is exactly 0
};

/// Modified Bessel function of the second kind K_ν(x), ν ≥ 0, x > 0.
///
/// Half-integer orders use the closed-form recurrence, x > 20 + ν² the
/// asymptotic series, and everything else the integral
/// ∫₀^∞ e^{−x cosh t} cosh(νt) dt. Accuracy target is 1e−10 relative for
/// x ∈ [1e−6, 700] and ν ∈ [0, 50]. For x > 700 the result is 0 with the
/// underflow flag set. Throws std::domain_error for x ≤ 0 or invalid ν.
BesselValue bessel_k_checked(double nu, double x);

/// Value of bessel_k_checked.
double bessel_k(double nu, double x);

/// Integral representation only, trapezoid rule in t. Always available.
double bessel_k_integral(double nu, double x);

/// Leading `terms` terms of the large-x expansion
/// √(π/2x) e^{−x} Σ a_k(ν)/x^k. Requires x ≥ 10·max(1, ν²).
double bessel_k_asymptotic(double nu, double x, int terms);

/// a_k(ν) = Π_{j=1..k} (4ν² − (2j−1)²) / (k! 8^k).
double asymptotic_coefficient(double nu, int k);

/// K_{m+1/2}(x) = √(2x/π)·k_m(x), with k_m from the upward recurrence
/// k_{j+1} = k_{j−1} + (2j+1)/x·k_j.
double bessel_k_half_integer(int m, double x);

}  // namespace vgnet::specfun
