#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vgnet/error.hpp"
#include "vgnet/linalg/eigen.hpp"
#include "vgnet/linalg/expm.hpp"
#include "vgnet/linalg/lyapunov.hpp"
#include "vgnet/linalg/matrix.hpp"
#include "vgnet/networks/rc_circuit.hpp"

namespace vgnet::linalg {
namespace {

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

TEST(SymMatrixTest, RejectsAsymmetricInput) {
  EXPECT_THROW(SymMatrix(Matrix{{1.0, 2.0}, {0.0, 1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(SymMatrix(Matrix{{1.0, 2.0}, {2.0 + 1e-15, 1.0}}));
}

TEST(SymEigenTest, Identity) {
  const auto e = sym_eigen(SymMatrix::identity(3));
  ASSERT_EQ(e.values.size(), 3u);
  for (double v : e.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(SymEigenTest, DiagonalSortedAscending) {
  const double d[] = {3.0, 1.0, 2.0};
  const auto e = sym_eigen(SymMatrix::diagonal(d));
  EXPECT_DOUBLE_EQ(e.values[0], 1.0);
  EXPECT_DOUBLE_EQ(e.values[1], 2.0);
  EXPECT_DOUBLE_EQ(e.values[2], 3.0);
}

TEST(SymEigenTest, TwoByTwoFromCharacteristicPolynomial) {
  // λ² − 4λ + 3 = 0
  const auto e = sym_eigen(SymMatrix{{2.0, 1.0}, {1.0, 2.0}});
  EXPECT_NEAR(e.values[0], 1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 3.0, 1e-14);
}

TEST(SymEigenTest, NonSymmetricRejected) {
  EXPECT_THROW(sym_eigen(Matrix{{1.0, 1.0}, {0.0, 1.0}}), std::invalid_argument);
}

TEST(SymEigenTest, ReconstructionAndOrthogonality) {
  auto rng = numeric::make_stream(11);
  for (std::size_t n : {1u, 2u, 5u, 12u, 30u, 64u}) {
    const SymMatrix m = testing::random_spd(rng, n, -1.0);  // indefinite is fine here
    const auto e = sym_eigen(m);
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(e.values[k - 1], e.values[k]);
    Matrix vd = e.vectors;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) vd(i, k) *= e.values[k];
    EXPECT_LE(max_diff(vd * e.vectors.transposed(), m.matrix()), 1e-10 * m.max_abs()) << "n=" << n;
    EXPECT_LE(max_diff(e.vectors * e.vectors.transposed(), Matrix::identity(n)), 1e-10) << "n=" << n;
  }
}

TEST(SymSqrtTest, Identity) {
  EXPECT_LE(max_diff(sym_sqrt(SymMatrix::identity(4)).matrix(), Matrix::identity(4)), 1e-15);
}

TEST(SymSqrtTest, Diagonal) {
  const double d[] = {4.0, 9.0};
  const SymMatrix r = sym_sqrt(SymMatrix::diagonal(d));
  EXPECT_NEAR(r(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(r(1, 1), 3.0, 1e-15);
  EXPECT_NEAR(r(0, 1), 0.0, 1e-15);
}

TEST(SymSqrtTest, SquaresBackToInput) {
  // [[2,1],[1,2]]² = [[5,4],[4,5]]
  const SymMatrix r = sym_sqrt(SymMatrix{{5.0, 4.0}, {4.0, 5.0}});
  EXPECT_LE(max_diff(r.matrix(), Matrix{{2.0, 1.0}, {1.0, 2.0}}), 1e-14);
}

TEST(SymSqrtTest, NegativeEigenvalueRejectedTinyClamped) {
  EXPECT_THROW(sym_sqrt(SymMatrix{{1.0, 0.0}, {0.0, -1e-6}}), std::domain_error);
  const SymMatrix r = sym_sqrt(SymMatrix{{1.0, 0.0}, {0.0, -1e-13}});
  EXPECT_EQ(r(1, 1), 0.0);
}

TEST(SymSqrtTest, RandomPsdIdempotence) {
  auto rng = numeric::make_stream(12);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 1 + rep % 10;
    // rank-deficient PSD as well as PD
    const Matrix s = testing::random_matrix(rng, n, std::max<std::size_t>(1, n - rep % 3));
    const SymMatrix m = SymMatrix::symmetrized(s * s.transposed());
    const SymMatrix r = sym_sqrt(m);
    EXPECT_LE(max_diff(r.matrix() * r.matrix(), m.matrix()), 1e-9 * m.max_abs());
  }
}

TEST(ExpmTest, ZeroGivesIdentity) { EXPECT_EQ(max_diff(expm(Matrix(3, 3)), Matrix::identity(3)), 0.0); }

TEST(ExpmTest, Diagonal) {
  const Matrix e = expm(Matrix{{1.0, 0.0}, {0.0, -1.0}});
  EXPECT_NEAR(e(0, 0), std::numbers::e, 1e-15 * std::numbers::e);
  EXPECT_NEAR(e(1, 1), 1.0 / std::numbers::e, 1e-15 / std::numbers::e);
  EXPECT_EQ(e(0, 1), 0.0);
}

TEST(ExpmTest, RotationByOneRadian) {
  const Matrix e = expm(Matrix{{0.0, -1.0}, {1.0, 0.0}});
  EXPECT_LE(max_diff(e, Matrix{{std::cos(1.0), -std::sin(1.0)}, {std::sin(1.0), std::cos(1.0)}}), 1e-15);
}

TEST(ExpmTest, MatchesTaylorOracle) {
  auto rng = numeric::make_stream(13);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const double scale = std::pow(10.0, -2.0 + 0.15 * rep);  // norms from 1e−2 to ~30
    const Matrix a = testing::random_matrix(rng, n, n) * scale;
    const Matrix ref = testing::taylor_expm(a);
    EXPECT_LE(max_diff(expm(a), ref), 1e-10 * ref.max_abs()) << "rep=" << rep;
  }
}

TEST(ExpmTest, SemigroupForRandomStable) {
  auto rng = numeric::make_stream(14);
  for (int rep = 0; rep < 40; ++rep) {
    const Matrix a = testing::random_stable(rng, 1 + rep % 8);
    const double s = testing::uniform(rng, 0.0, 2.0);
    const double t = testing::uniform(rng, 0.0, 2.0);
    const Matrix whole = expm(a * (s + t));
    EXPECT_LE(norm1(whole - expm(a * s) * expm(a * t)), 1e-8 * norm1(whole));
  }
}

TEST(LyapunovTest, ScalarDecoupling) {
  const SymMatrix m = solve_lyapunov(Matrix::identity(2) * -1.0, SymMatrix{{2.0, 0.0}, {0.0, 2.0}});
  EXPECT_LE(max_diff(m.matrix(), Matrix::identity(2)), 1e-15);
}

TEST(LyapunovTest, Diagonal) {
  const SymMatrix m = solve_lyapunov(Matrix{{-1.0, 0.0}, {0.0, -2.0}}, SymMatrix{{2.0, 0.0}, {0.0, 4.0}});
  EXPECT_LE(max_diff(m.matrix(), Matrix::identity(2)), 1e-15);
}

TEST(LyapunovTest, UnstableRejected) {
  EXPECT_THROW(solve_lyapunov(Matrix{{0.1, 0.0}, {0.0, -1.0}}, SymMatrix::identity(2)), std::domain_error);
  EXPECT_THROW(solve_lyapunov(Matrix{{0.0, -1.0}, {1.0, 0.0}}, SymMatrix::identity(2)), std::domain_error);
}

TEST(LyapunovTest, RcCircuitMatchesQuadrature) {
  // A and BBᵀ at the Figure 2 parameters, T1 = 88 K, T2 = 296 K.
  networks::RCCircuitSpec spec;
  spec.r1 = spec.r2 = 1e8;
  spec.c = 1e-10;
  spec.c1 = 6.8e-10;
  spec.c2 = 4.2e-10;
  spec.t1 = 88.0;
  spec.t2 = 296.0;
  const auto model = networks::rc_model(spec);
  const Matrix q = model.b() * model.b().transposed();
  const SymMatrix m = solve_lyapunov(model.a(), SymMatrix::symmetrized(q));
  const Matrix ref = testing::lyapunov_quadrature(model.a(), q);
  EXPECT_LE(max_diff(m.matrix(), ref), 1e-10 * ref.max_abs());
  EXPECT_LE(lyapunov_residual(model.a(), m, SymMatrix::symmetrized(q)), 1e-10 * q.max_abs());
}

TEST(LyapunovTest, RandomStableMatchesQuadrature) {
  auto rng = numeric::make_stream(15);
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const Matrix a = testing::random_stable(rng, n);
    const Matrix b = testing::random_matrix(rng, n, 1 + rep % 3);
    const Matrix q = b * b.transposed();
    const SymMatrix m = solve_lyapunov(a, SymMatrix::symmetrized(q));
    const Matrix ref = testing::lyapunov_quadrature(a, q);
    EXPECT_LE(max_diff(m.matrix(), ref), 1e-6 * ref.max_abs()) << "rep=" << rep;
    EXPECT_LE(lyapunov_residual(a, m, SymMatrix::symmetrized(q)), 1e-10 * q.max_abs());
    EXPECT_TRUE(is_positive_semidefinite(m));
  }
}

TEST(PsdFactorTest, ReproducesRankDeficientMatrix) {
  auto rng = numeric::make_stream(16);
  const Matrix s = testing::random_matrix(rng, 6, 3);
  const SymMatrix m = SymMatrix::symmetrized(s * s.transposed());
  const Matrix f = psd_factor(m);
  EXPECT_LE(max_diff(f * f.transposed(), m.matrix()), 1e-12 * m.max_abs());
}

TEST(PsdFactorTest, IndefiniteRejected) {
  EXPECT_THROW(psd_factor(SymMatrix{{1.0, 2.0}, {2.0, 1.0}}), NumericalError);
}

}  // namespace
}  // namespace vgnet::linalg
