#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vgnet/linalg/spectrum.hpp"
#include "vgnet/networks/rc_circuit.hpp"

namespace vgnet::linalg {
namespace {

TEST(SpectralAbscissaTest, Diagonal) {
  EXPECT_NEAR(spectral_abscissa(Matrix{{-1.0, 0.0}, {0.0, -3.0}}), -1.0, 1e-15);
}

TEST(SpectralAbscissaTest, PurelyImaginary) {
  EXPECT_NEAR(spectral_abscissa(Matrix{{0.0, -1.0}, {1.0, 0.0}}), 0.0, 1e-15);
  const auto ev = eigenvalues(Matrix{{0.0, -1.0}, {1.0, 0.0}});
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(std::abs(ev[0].imag()), 1.0, 1e-15);
}

TEST(SpectralAbscissaTest, RcCircuitBelowMinusTwelve) {
  networks::RCCircuitSpec spec;
  spec.r1 = spec.r2 = 1e8;
  spec.c = 1e-10;
  spec.c1 = 6.8e-10;
  spec.c2 = 4.2e-10;
  spec.t1 = 88.0;
  spec.t2 = 296.0;
  const Matrix a = networks::rc_model(spec).a();
  const double abscissa = spectral_abscissa(a);
  EXPECT_LT(abscissa, -12.0);
  EXPECT_NEAR(abscissa, testing::eigen_abscissa(a), 1e-8 * std::abs(abscissa));
}

TEST(SpectralAbscissaTest, ScalarAndZero) {
  EXPECT_EQ(spectral_abscissa(Matrix{{-2.5}}), -2.5);
  EXPECT_EQ(spectral_abscissa(Matrix(3, 3)), 0.0);
}

TEST(SpectralAbscissaTest, RejectsBadShapes) {
  EXPECT_THROW(spectral_abscissa(Matrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(spectral_abscissa(Matrix(33, 33)), std::invalid_argument);
}

TEST(SpectralAbscissaTest, RandomMatricesAgainstEigen) {
  auto rng = numeric::make_stream(21);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + rep % 32;
    const Matrix a = testing::random_matrix(rng, n, n) * std::pow(10.0, -3.0 + rep % 7);
    const double ref = testing::eigen_abscissa(a);
    EXPECT_NEAR(spectral_abscissa(a), ref, 1e-8 * std::max(std::abs(ref), a.max_abs())) << "n=" << n;
  }
}

TEST(SpectralAbscissaTest, RepeatedEigenvalues) {
  EXPECT_NEAR(spectral_abscissa(Matrix::identity(8) * -1.0), -1.0, 1e-14);
  EXPECT_NEAR(spectral_abscissa(Matrix::identity(32) * -1.0), -1.0, 1e-14);
  Matrix jordan(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    jordan(i, i) = -2.0;
    if (i + 1 < 6) jordan(i, i + 1) = 1.0;
  }
  EXPECT_NEAR(spectral_abscissa(jordan), -2.0, 1e-12);
}

TEST(SpectralAbscissaTest, HiddenMultiplicitiesUnderSimilarity) {
  // Q·diag(...)·Qᵀ with 3 distinct values repeated up to 8 times plus a
  // complex pair on top; QR fallback territory for the polynomial roots.
  auto rng = numeric::make_stream(22);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 4 + rep % 20;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = -1.0 - (i % 3);
    double expected = -1.0;
    if (n > 5) {
      d(0, 0) = d(1, 1) = -0.5;
      d(0, 1) = 0.7;
      d(1, 0) = -0.7;
      expected = -0.5;
    }
    const Eigen::MatrixXd r = testing::to_eigen(testing::random_matrix(rng, n, n));
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(r).householderQ();
    const Matrix a = testing::from_eigen(q * d * q.transpose());
    EXPECT_NEAR(spectral_abscissa(a), expected, 1e-8) << "n=" << n;
  }
}

TEST(EigenvaluesTest, ConjugatePairsAndTrace) {
  auto rng = numeric::make_stream(23);
  const Matrix a = testing::random_matrix(rng, 9, 9);
  const auto ev = eigenvalues(a);
  std::complex<double> sum = 0.0;
  for (const auto& z : ev) sum += z;
  EXPECT_NEAR(sum.real(), a.trace(), 1e-12 * 9);
  EXPECT_NEAR(sum.imag(), 0.0, 1e-12 * 9);
}

TEST(ControllabilityTest, ScalarZeroDrift) {
  const auto r = is_controllable(Matrix{{0.0}}, Matrix{{1.0}});
  EXPECT_TRUE(r.controllable);
  EXPECT_EQ(r.rank, 1u);
}

TEST(ControllabilityTest, UnreachableMode) {
  const auto r = is_controllable(Matrix{{-1.0, 0.0}, {0.0, -2.0}}, Matrix{{1.0}, {0.0}});
  EXPECT_FALSE(r.controllable);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.dim, 2u);
}

TEST(ControllabilityTest, SingleOscillatorWithFriction) {
  // Krylov matrix [b, ab] = [[√2, −√2], [0, √2]] has rank 2.
  const auto r = is_controllable(Matrix{{-1.0, -1.0}, {1.0, 0.0}}, Matrix{{std::sqrt(2.0)}, {0.0}});
  EXPECT_TRUE(r.controllable);
}

TEST(ControllabilityTest, DampedEndOfChain) {
  // p1, p2, p3, q1, q2, q3 with friction on vertex 0 only.
  const std::size_t n = 3;
  Matrix a(2 * n, 2 * n);
  const Matrix v{{2.0, -1.0, 0.0}, {-1.0, 2.0, -1.0}, {0.0, -1.0, 2.0}};
  a(0, 0) = -0.5;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, n + j) = -v(i, j);
    a(n + i, i) = 1.0;
  }
  Matrix b(2 * n, 1);
  b(0, 0) = 1.0;
  EXPECT_TRUE(is_controllable(a, b).controllable);
  b(0, 0) = 0.0;
  b(1, 0) = 1.0;  // middle vertex: the antisymmetric mode is unreachable
  a(0, 0) = 0.0;
  a(1, 1) = -0.5;
  const auto r = is_controllable(a, b);
  EXPECT_FALSE(r.controllable);
  EXPECT_EQ(r.rank, 4u);
}

TEST(ControllabilityTest, ShapeMismatch) {
  EXPECT_THROW(is_controllable(Matrix(2, 2), Matrix(3, 1)), std::invalid_argument);
}

}  // namespace
}  // namespace vgnet::linalg
