#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "vgnet/networks/rc_circuit.hpp"
#include "vgnet/ou/finite_time.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"
#include "vgnet/statlab/goodness.hpp"
#include "vgnet/statlab/ldp.hpp"
#include "vgnet/statlab/sample.hpp"
#include "vgnet/statlab/tail.hpp"
#include "vgnet/vargamma/density.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::statlab {
namespace {

using linalg::Matrix;
using linalg::SymMatrix;

// M = I and L = ½I: the limit law is Laplace(1).
ou::LinearSDEModel rotating_model() {
  return ou::build_model(Matrix{{-1.0, 0.5}, {-0.5, -1.0}}, Matrix::identity(2) * std::sqrt(2.0));
}

ou::QuadraticObservable half_identity(std::size_t n) { return ou::QuadraticObservable(SymMatrix(Matrix::identity(n) * 0.5)); }

double laplace_cdf(double s) { return s < 0.0 ? 0.5 * std::exp(s) : 1.0 - 0.5 * std::exp(-s); }

// Density of the exact finite-time law, in units where the energy scale is
// `unit`, by inversion of χ_t.
class FiniteTimeDensity {
 public:
  FiniteTimeDensity(ou::FiniteTimeQtLaw law, double unit) : law_(std::move(law)), unit_(unit) {}
  double operator()(double s) const {
    auto re = [&](double a) { return ou::finite_time_qt_charfn(law_, a / unit_).real(); };
    auto im = [&](double a) { return ou::finite_time_qt_charfn(law_, a / unit_).imag(); };
    const double w = std::abs(s);
    const double sign = s > 0.0 ? 1.0 : -1.0;
    return (cos_.integrate(re, w).first + sign * sin_.integrate(im, w).first) / std::numbers::pi;
  }

 private:
  ou::FiniteTimeQtLaw law_;
  double unit_;
  mutable boost::math::quadrature::ooura_fourier_cos<double> cos_{1e-10};
  mutable boost::math::quadrature::ooura_fourier_sin<double> sin_{1e-10};
};

TEST(KolmogorovTest, KnownValues) {
  EXPECT_NEAR(kolmogorov_cdf(1.3580986393225507), 0.95, 1e-10);
  EXPECT_NEAR(kolmogorov_cdf(1.6276236115189502), 0.99, 1e-10);
  EXPECT_NEAR(kolmogorov_cdf(0.5), 0.036054756335124906, 1e-14);
  EXPECT_EQ(kolmogorov_cdf(0.0), 0.0);
  // The two series agree where they switch.
  EXPECT_NEAR(kolmogorov_cdf(std::nextafter(1.0, 0.0)), kolmogorov_cdf(1.0), 1e-14);
}

TEST(KolmogorovTest, Critical) {
  EXPECT_NEAR(ks_critical(1'000'000, 0.01), 1.6276236115189502e-3, 1e-12);
  EXPECT_NEAR(ks_critical(100, 0.05), 0.13580986393225507, 1e-10);
  EXPECT_THROW(ks_critical(0, 0.05), std::invalid_argument);
  EXPECT_THROW(ks_critical(10, 1.0), std::invalid_argument);
}

TEST(KsDistanceTest, ConstantSampleAgainstSymmetricLaw) {
  const std::vector<double> zeros(1000, 0.0);
  EXPECT_DOUBLE_EQ(ks_distance(zeros, laplace_cdf), 0.5);
  const vargamma::VarianceGammaLaw law({0.5, 1.0});
  EXPECT_NEAR(ks_distance(zeros, law), 0.5, 1e-9);
}

TEST(KsDistanceTest, SingleValue) {
  const std::vector<double> one{0.3};
  EXPECT_DOUBLE_EQ(ks_distance(one, laplace_cdf), laplace_cdf(0.3));
  EXPECT_THROW(ks_distance(std::vector<double>{}, laplace_cdf), std::invalid_argument);
}

TEST(KsDistanceTest, OwnSampleBelowCritical) {
  auto rng = numeric::make_stream(7);
  const vargamma::VarianceGammaLaw law({1.0, 1.0});
  const auto draws = vargamma::sample(law, rng, 1'000'000);
  EXPECT_LE(ks_distance(draws, laplace_cdf), 0.0019);
  EXPECT_LE(ks_distance(draws, law), 0.0019);
}

TEST(HistogramTest, CountsAndNormalization) {
  const std::vector<double> v{-1.5, -0.2, 0.0, 0.1, 0.9, 1.0, 3.0};
  const auto h = histogram(v, 4, -1.0, 1.0);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h[0].count, 0u);
  EXPECT_EQ(h[1].count, 1u);
  EXPECT_EQ(h[2].count, 2u);
  EXPECT_EQ(h[3].count, 1u);
  EXPECT_DOUBLE_EQ(h[0].center, -0.75);
  double mass = 0.0;
  for (const auto& b : h) mass += b.density * 0.5;
  EXPECT_NEAR(mass, 1.0, 1e-15);
  EXPECT_THROW(histogram(v, 0, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(histogram(v, 3, 1.0, 1.0), std::invalid_argument);
}

TEST(SampleTest, ReproducibleAndWorkerInvariantShape) {
  const auto model = rotating_model();
  const auto obs = half_identity(2);
  const auto a = sample_qt(model, obs, 1.0, 5000, 42, 2);
  const auto b = sample_qt(model, obs, 1.0, 5000, 42, 2);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.workers, 2u);
  EXPECT_EQ(a.seed, 42u);
  const auto c = sample_qt(model, obs, 1.0, 5000, 43, 2);
  EXPECT_NE(a.values, c.values);
  // One worker reproduces the first block of a run with more workers.
  const auto single = sample_qt(model, obs, 1.0, 2500, 42, 1);
  EXPECT_TRUE(std::equal(single.values.begin(), single.values.end(), a.values.begin()));
}

TEST(SampleTest, ZeroTimeGivesZeros) {
  const auto s = sample_qt(rotating_model(), half_identity(2), 0.0, 100, 1);
  for (double v : s.values) EXPECT_EQ(v, 0.0);
}

TEST(SampleTest, MeanIsZero) {
  const auto s = sample_qt(rotating_model(), half_identity(2), 3.0, 200'000, 11, 4);
  double mean = 0.0, sq = 0.0;
  for (double v : s.values) {
    mean += v;
    sq += v * v;
  }
  mean /= s.count();
  const double sd = std::sqrt(sq / s.count() - mean * mean);
  EXPECT_LE(std::abs(mean), 4.0 * sd / std::sqrt(static_cast<double>(s.count())));
}

TEST(SampleTest, DimensionMismatchRejected) {
  EXPECT_THROW(sample_qt(rotating_model(), half_identity(3), 1.0, 10, 1), std::invalid_argument);
  EXPECT_THROW(parallel_blocks(10, 0, [](std::size_t, std::size_t, std::size_t) {}), std::invalid_argument);
}

TEST(SampleTest, WorkerExceptionsPropagate) {
  EXPECT_THROW(parallel_blocks(10, 3,
                               [](std::size_t w, std::size_t, std::size_t) {
                                 if (w == 1) throw std::runtime_error("boom");
                               }),
               std::runtime_error);
}

TEST(SampleTest, RcHistogramMatchesExactFiniteTimeLaw) {
  const auto spec = testing::figure2_circuit(88.0, 296.0);
  const auto model = networks::rc_model(spec);
  const auto obs = networks::rc_heat_observable(spec);
  const double t = 0.2;
  const std::size_t n = 100'000;
  const double unit = spec.k_b * spec.t2;
  auto s = sample_qt(model, obs, t, n, 2024, 4);
  for (double& v : s.values) v /= unit;

  const FiniteTimeDensity f(ou::finite_time_qt_law(model, obs, t), unit);
  const double lo = -6.0, hi = 6.0;
  const std::size_t bins = 48;
  const double w = (hi - lo) / bins;
  const auto h = histogram(s.values, bins, lo, hi);
  const double node = w / (2.0 * std::sqrt(3.0));
  double worst = 0.0;
  for (const auto& b : h) {
    // Two-point Gauss–Legendre bin mass; both nodes avoid the kink at 0.
    const double p = 0.5 * w * (f(b.center - node) + f(b.center + node));
    const double phat = static_cast<double>(b.count) / n;
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    worst = std::max(worst, std::abs(phat - p) / sigma);
  }
  EXPECT_LE(worst, 4.5);
}

TEST(SampleTest, KsShrinksWithTime) {
  const auto model = rotating_model();
  const auto obs = half_identity(2);
  const std::size_t n = 100'000;
  const double band = 2.0 * ks_critical(n, 0.01);
  std::vector<double> ks;
  for (double t : {0.5, 1.0, 2.0, 4.0}) ks.push_back(ks_distance(sample_qt(model, obs, t, n, 5, 2).values, laplace_cdf));
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) EXPECT_LE(ks[i + 1], ks[i] + band);
  EXPECT_LE(ks.back(), band);
  EXPECT_GT(ks.front(), ks.back());
}

TEST(LdpTest, Theory) {
  const vargamma::VarianceGammaLaw law({0.5, 2.0});
  EXPECT_DOUBLE_EQ(ldp_theory(law, {1.0, 3.0}), -0.5);
  EXPECT_DOUBLE_EQ(ldp_theory(law, {-3.0, -1.0}), -0.5);
  EXPECT_DOUBLE_EQ(ldp_theory(law, {-1.0, 1.0}), 0.0);
  EXPECT_THROW(ldp_theory(law, {0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(ldp_theory(law, {-1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(ldp_theory(law, {2.0, 1.0}), std::invalid_argument);
}

TEST(LdpTest, Wilson) {
  const auto ci = wilson_interval(0, 100);
  EXPECT_EQ(ci.lower, 0.0);
  EXPECT_NEAR(ci.upper, 0.036994, 1e-6);
  const auto mid = wilson_interval(50, 100);
  EXPECT_NEAR(mid.lower, 0.40383, 1e-5);
  EXPECT_NEAR(mid.upper, 0.59617, 1e-5);
  EXPECT_THROW(wilson_interval(0, 0), std::invalid_argument);
}

TEST(LdpTest, ScanBracketsExactProbability) {
  const auto model = rotating_model();
  const auto obs = half_identity(2);
  const std::vector<double> ts{1.0, 2.0, 4.0, 6.0};
  const auto est = ldp_scan(model, obs, {1.0, 2.0}, ts, 400'000, 3, 2);
  EXPECT_DOUBLE_EQ(est.theoretical, -1.0);
  ASSERT_EQ(est.points.size(), ts.size());
  EXPECT_TRUE(est.enough_hits);
  for (const auto& p : est.points) {
    // Exact window probability from the finite-time density.
    const FiniteTimeDensity f(ou::finite_time_qt_law(model, obs, p.t), 1.0);
    const double prob = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, p.t, 2.0 * p.t, 8, 1e-10);
    const double exact = std::log(prob) / p.t;
    EXPECT_LE(p.lower, exact) << p.t;
    EXPECT_GE(p.upper, exact) << p.t;
    EXPECT_LE(p.lower, p.estimate);
    EXPECT_LE(p.estimate, p.upper);
  }
  const auto best = best_point(est);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->t, 6.0);
}

TEST(LdpTest, WindowContainingZero) {
  const auto est = ldp_scan(rotating_model(), half_identity(2), {-0.5, 1.5}, {2.0, 8.0}, 50'000, 9);
  EXPECT_EQ(est.theoretical, 0.0);
  EXPECT_LE(est.points.back().estimate, 0.0);
  EXPECT_GE(est.points.back().estimate, -0.05);
}

TEST(LdpTest, NoHitsFlagged) {
  const auto est = ldp_scan(rotating_model(), half_identity(2), {50.0, 60.0}, {5.0}, 1000, 1);
  const auto& p = est.points.front();
  EXPECT_EQ(p.hits, 0u);
  EXPECT_TRUE(p.lower_bound_only);
  EXPECT_EQ(p.estimate, -std::numeric_limits<double>::infinity());
  EXPECT_TRUE(std::isfinite(p.upper));
  EXPECT_FALSE(est.enough_hits);
  EXPECT_FALSE(best_point(est).has_value());
}

TEST(LdpTest, Reproducible) {
  const auto a = ldp_scan(rotating_model(), half_identity(2), {0.5, 1.0}, {1.0, 2.0}, 10'000, 77, 3);
  const auto b = ldp_scan(rotating_model(), half_identity(2), {0.5, 1.0}, {1.0, 2.0}, 10'000, 77, 3);
  for (std::size_t k = 0; k < a.points.size(); ++k) EXPECT_EQ(a.points[k].hits, b.points[k].hits);
}

TEST(LdpTest, InputValidation) {
  const auto model = rotating_model();
  const auto obs = half_identity(2);
  EXPECT_THROW(ldp_scan(model, obs, {1.0, 2.0}, {}, 10, 1), std::invalid_argument);
  EXPECT_THROW(ldp_scan(model, obs, {1.0, 2.0}, {2.0, 1.0}, 10, 1), std::invalid_argument);
  EXPECT_THROW(ldp_scan(model, obs, {1.0, 2.0}, {-1.0}, 10, 1), std::invalid_argument);
  EXPECT_THROW(ldp_scan(model, obs, {1.0, 2.0}, {1.0}, 0, 1), std::invalid_argument);
}

TEST(TailTest, EquilibriumSlopeExact) {
  const double kt = 2.5;
  const vargamma::VarianceGammaLaw law({kt, kt});
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) grid.push_back(kt * (1.0 + 19.0 * i / 199.0));
  const auto prof = vargamma::density_profile(law, grid);
  const auto fit = tail_slope(prof, kt, 20.0 * kt);
  EXPECT_EQ(fit.points, 200u);
  EXPECT_NEAR(fit.slope, -1.0 / kt, 1e-8);
}

TEST(TailTest, NonEquilibriumSlopeNearTheory) {
  const auto spec = testing::figure2_circuit(88.0, 296.0);
  const auto law = networks::rc_limit_law(spec);
  const double lp = law.lambda_max();
  std::vector<double> grid;
  for (int i = 0; i < 400; ++i) grid.push_back(lp * (10.0 + 20.0 * i / 399.0));
  const auto prof = vargamma::density_profile(law, grid);
  const auto fit = tail_slope(prof, 10.0 * lp, 30.0 * lp);
  // f ~ C s^{−1/2} e^{−s/λ₊}: the fitted slope carries the least-squares
  // slope of −½ log s over the same grid on top of −1/λ₊.
  std::vector<vargamma::DensityPoint> prefactor;
  for (double s : grid) prefactor.push_back({s, 1.0 / std::sqrt(s)});
  const double expected = -1.0 / lp + tail_slope(prefactor, 10.0 * lp, 30.0 * lp).slope;
  EXPECT_NEAR(fit.slope, expected, 2e-3 / lp);
  // Pointwise, the local slope at the end of the window is within 2%.
  const double h = 1e-3 * lp, s1 = 30.0 * lp;
  const double local = (std::log(vargamma::density(law, s1 + h)) - std::log(vargamma::density(law, s1 - h))) / (2.0 * h);
  EXPECT_NEAR(local * lp, -1.0, 0.02);
}

TEST(TailTest, SampleSlope) {
  auto rng = numeric::make_stream(12);
  const auto draws = vargamma::sample(vargamma::VarianceGammaLaw({1.0, 1.0}), rng, 1'000'000);
  const auto fit = tail_slope_sample(draws, 2.0, 8.0);
  EXPECT_GT(fit.points, 100'000u);
  EXPECT_NEAR(fit.slope, -1.0, 0.05);
}

TEST(TailTest, TooFewPointsRejected) {
  std::vector<vargamma::DensityPoint> grid;
  for (int i = 0; i < 99; ++i) grid.push_back({1.0 + i, std::exp(-1.0 - i)});
  EXPECT_THROW(tail_slope(grid, 0.0, 200.0), std::invalid_argument);
  const std::vector<double> few{1.0, 2.0, 3.0};
  EXPECT_THROW(tail_slope_sample(few, 0.0, 10.0), std::invalid_argument);
}

}  // namespace
}  // namespace vgnet::statlab
