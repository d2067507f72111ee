#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vgnet/numeric/quadrature.hpp"
#include "vgnet/specfun/bessel.hpp"
#include "vgnet/vargamma/density.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::vargamma {
namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 30-digit reference values of (1/π)∫₀^∞ cos(αs)χ(α)dα.
struct Frozen {
  std::vector<double> lambdas;
  double s;
  double f;
};
const std::vector<Frozen>& frozen() {
  static const std::vector<Frozen> v = {
      {{1.0, 2.0}, 1.0, 0.168218272447561376},
      {{1.0, 2.0}, 0.0, 0.343220125154587541},
      {{1.0, 2.0}, 10.0, 0.000710876416638849296},
      {{0.5, 1.0, 2.0}, 0.7, 0.207867368161804161},
      {{0.5, 1.0, 2.0}, 0.0, 0.281672264596946403},
      {{0.5, 1.0, 2.0}, 15.0, 0.0000488644712755563182},
      {{0.3, 0.6, 1.0, 1.5}, 2.0, 0.0903976242099431995},
  };
  return v;
}

TEST(DensityTest, FrozenReferenceValues) {
  for (const auto& c : frozen()) {
    const VarianceGammaLaw law(c.lambdas);
    EXPECT_LE(rel(density(law, c.s), c.f), 1e-8) << "n=" << law.dim() << " s=" << c.s;
    EXPECT_LE(rel(density(law, -c.s), c.f), 1e-8);
  }
}

TEST(DensityTest, IsotropicTwoDimIsLaplace) {
  for (double lambda : {0.1, 1.0, 4.2}) {
    const VarianceGammaLaw law({lambda, lambda});
    for (double s : {0.0, 0.3, 2.0, 20.0}) {
      const double x = s * lambda;
      EXPECT_LE(rel(density(law, x), std::exp(-s) / (2.0 * lambda)), 1e-14);
    }
  }
}

TEST(DensityTest, IsotropicBesselForm) {
  // |S^{n−1}| = 2π^{n/2}/Γ(n/2)
  for (std::size_t n : {3u, 4u, 5u, 8u}) {
    const double lambda = 0.8;
    const double nu = 0.5 * (static_cast<double>(n) - 1.0);
    const double area = 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
    const VarianceGammaLaw law(std::vector<double>(n, lambda));
    for (double s : {0.2, 1.0, 5.0, 25.0}) {
      const double expected = area * specfun::bessel_k(nu, s / lambda) * std::pow(s, nu) /
                              std::pow(2.0 * kPi * lambda, 0.5 * (n + 1.0));
      EXPECT_LE(rel(density(law, s), expected), 1e-12) << "n=" << n << " s=" << s;
    }
  }
}

TEST(DensityTest, OneDimensional) {
  const VarianceGammaLaw law({1.0});
  EXPECT_NEAR(density(law, 1.0), 0.134016241016994274, 1e-15);
  EXPECT_NEAR(density(law, -1.0), density(law, 1.0), 0.0);
  EXPECT_THROW(density(law, 0.0), std::domain_error);
}

TEST(DensityTest, TwoDimAngularFormAgainstFourierOracle) {
  auto rng = numeric::make_stream(41);
  for (int rep = 0; rep < 10; ++rep) {
    const double l1 = testing::uniform(rng, 0.2, 2.0);
    const double l2 = testing::uniform(rng, 0.2, 2.0);
    const VarianceGammaLaw law({l1, l2});
    for (double u : {0.0, 0.05, 0.5, 2.0, 8.0, 20.0}) {
      const double s = u * law.lambda_max();
      // The oracle's absolute floor is about 1e−16.
      const double ref = testing::fourier_density(law.lambdas(), s);
      EXPECT_LE(std::abs(density_two_dim(law.two_dim_params(), s) - ref), 1e-9 * ref + 1e-16)
          << l1 << " " << l2 << " s=" << s;
    }
  }
}

TEST(DensityTest, TwoDimAngularFormTail) {
  // mpmath quadosc at 30 digits.
  const struct {
    double l1, l2, s, f;
  } cases[] = {{1.2105543731195834, 1.357584628607486, 27.15169257214972, 3.397971282534467e-10},
               {1.4006724671874347, 0.63082849658213103, 28.013449343748693, 1.471159831662847e-10},
               {1.1968102256228805, 1.8784209347164733, 37.568418694329466, 1.286600936015859e-10}};
  for (const auto& c : cases)
    EXPECT_LE(rel(density_two_dim(two_dim_params(c.l1, c.l2), c.s), c.f), 1e-12) << c.s;
}

TEST(DensityTest, FourierPathAgainstOracle) {
  auto rng = numeric::make_stream(42);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<double> l;
    const std::size_t n = 3 + rep % 4;
    for (std::size_t k = 0; k < n; ++k) l.push_back(testing::uniform(rng, 0.3, 2.0));
    const VarianceGammaLaw law(l);
    const FourierDensity f(law);
    // The real-axis oracle bottoms out near 1e−17 absolute, so it is only
    // trusted in the bulk; deeper tails are pinned below.
    for (double u : {0.0, 0.1, 1.0, 5.0}) {
      const double s = u * law.lambda_max();
      EXPECT_LE(rel(f(s), testing::fourier_density(l, s)), 1e-6) << "n=" << n << " s=" << s;
    }
  }
}

TEST(DensityTest, FourierPathDeepTail) {
  // mpmath quadosc at 40 digits.
  const VarianceGammaLaw law3({1.3603991376796147, 0.90328161784872596, 0.39103306892279999});
  const FourierDensity f3(law3);
  EXPECT_LE(rel(f3(27.207982753592294), 1.92294413208454e-10), 1e-8);
  EXPECT_LE(rel(f3(40.811974130388442), 7.07781190458987e-15), 1e-8);
  EXPECT_LE(rel(f3(54.415965507184588), 2.77397706850183e-19), 1e-8);
  const VarianceGammaLaw law4({0.74676998191338129, 1.6116647695226269, 1.0468864023747697, 1.4938658806838478});
  const FourierDensity f4(law4);
  EXPECT_LE(rel(f4(32.23329539045254), 5.37991380879109675e-10), 1e-8);
  EXPECT_LE(rel(f4(48.349943085678809), 1.95186719647990006e-14), 1e-8);
  EXPECT_LE(rel(f4(64.466590780905079), 7.44199409865942436e-19), 1e-8);
}

TEST(DensityTest, SphereQuadratureAgreesWithInversion) {
  const VarianceGammaLaw law3({0.5, 1.0, 2.0});
  for (double s : {0.2, 1.0, 4.0, 12.0}) EXPECT_LE(rel(density_sphere(law3, s), density(law3, s)), 1e-6) << s;
  const VarianceGammaLaw law2({0.6, 1.7});
  for (double s : {0.0, 0.5, 3.0, 15.0}) EXPECT_LE(rel(density_sphere(law2, s), density(law2, s)), 1e-6) << s;
}

TEST(DensityTest, PeakMatchesSphereQuadrature) {
  for (const auto& l : {std::vector<double>{1.0, 2.0}, {0.3, 0.9}, {0.5, 1.0, 2.0}, {0.2, 0.4, 1.9}}) {
    const VarianceGammaLaw law(l);
    EXPECT_LE(rel(peak_density(law), density_sphere(law, 0.0)), 1e-6);
    EXPECT_LE(rel(peak_density(law), testing::fourier_density(l, 0.0)), 1e-6);
  }
  // n = 2 isotropic: 1/(2λ)
  EXPECT_LE(rel(peak_density(VarianceGammaLaw({1.5, 1.5})), 1.0 / 3.0), 1e-10);
  // n ≥ 4 via the one-dimensional identity
  for (const auto& l : {std::vector<double>{0.3, 0.6, 1.0, 1.5}, {0.5, 0.5, 0.7, 1.0, 1.1, 2.0}}) {
    EXPECT_LE(rel(peak_density(VarianceGammaLaw(l)), testing::fourier_density(l, 0.0)), 1e-8);
  }
}

TEST(DensityTest, ProfileMatchesPointwiseAndIsEven) {
  const VarianceGammaLaw law({0.4, 0.9, 1.3});
  std::vector<double> grid;
  for (int k = -50; k <= 50; ++k) grid.push_back(0.3 * k);
  const auto profile = density_profile(law, grid);
  ASSERT_EQ(profile.size(), grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    EXPECT_EQ(profile[k].s, grid[k]);
    EXPECT_LE(rel(profile[k].f, density(law, grid[k])), 1e-13);
    EXPECT_LE(rel(profile[k].f, profile[grid.size() - 1 - k].f), 1e-13);
  }
  const double one[] = {1.0};
  EXPECT_EQ(density_profile(law, one).size(), 1u);
  const double unsorted[] = {1.0, 0.5};
  EXPECT_THROW(density_profile(law, unsorted), std::invalid_argument);
}

TEST(DensityTest, NormalizationAndMonotoneDecay) {
  for (const auto& l : {std::vector<double>{0.7, 1.6}, {0.3, 1.0, 2.0}, {0.5, 0.6, 0.8, 1.5}, {1, 1, 2, 2, 3, 3}}) {
    const VarianceGammaLaw law(l);
    const double top = 60.0 * law.lambda_max();
    std::vector<double> grid;
    for (int k = 0; k <= 2400; ++k) grid.push_back(top * k / 2400.0);
    const auto profile = density_profile(law, grid);
    for (std::size_t k = 1; k < profile.size(); ++k) {
      if (profile[k].s > 40.0 * law.lambda_max()) break;
      EXPECT_LT(profile[k].f, profile[k - 1].f) << "n=" << law.dim() << " s=" << profile[k].s;
    }
    const FourierDensity fourier(law);
    auto f = [&](double s) { return law.dim() == 2 ? density(law, s) : fourier(s); };
    const double lm = law.lambda_max();
    const double mass = 2.0 * (numeric::integrate_adaptive(f, 0.0, lm, 1e-12).value +
                               numeric::integrate_adaptive(f, lm, top, 1e-12).value);
    EXPECT_NEAR(mass, 1.0, 1e-6) << "n=" << law.dim();
  }
}

TEST(DensityTest, FourierTransformReproducesCharFn) {
  const VarianceGammaLaw law({0.5, 1.0, 1.4});
  const FourierDensity f(law);
  const double lm = law.lambda_max();
  for (double a = -10.0 / law.lambda_min(); a <= 10.0 / law.lambda_min(); a += 2.5 / law.lambda_min()) {
    auto g = [&](double s) { return std::cos(a * s) * f(s); };
    double v = 0.0;
    for (int k = 0; k < 60; ++k) v += numeric::integrate_gl(g, k * lm, (k + 1) * lm, 40, 4);
    EXPECT_NEAR(2.0 * v, char_fn(law, a), 1e-5) << "alpha=" << a;
  }
}

TEST(DensityTest, TailSlopeApproachesInverseLargestLambda) {
  for (const auto& l : {std::vector<double>{0.7, 1.6}, {0.3, 1.0, 2.0}, {0.5, 0.6, 0.8, 1.5}}) {
    const VarianceGammaLaw law(l);
    const double lm = law.lambda_max();
    const double h = 0.01 * lm;
    const double slope = -(std::log(density(law, 30.0 * lm)) - std::log(density(law, 30.0 * lm - h))) / h;
    EXPECT_NEAR(slope * lm, 1.0, 0.02);
  }
}

TEST(DensityTest, PositiveAwayFromZero) {
  const VarianceGammaLaw law({0.2, 0.5, 3.0});
  for (double s : {1e-6, 0.1, 10.0, 100.0}) EXPECT_GT(density(law, s), 0.0);
}

}  // namespace
}  // namespace vgnet::vargamma
