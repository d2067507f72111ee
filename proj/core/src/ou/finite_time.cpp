#include "vgnet/ou/finite_time.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vgnet/error.hpp"
#include "vgnet/linalg/eigen.hpp"
#include "vgnet/linalg/expm.hpp"

namespace vgnet::ou {

using linalg::Matrix;
using linalg::SymMatrix;

FiniteTimeQtLaw finite_time_qt_law(const LinearSDEModel& model, const QuadraticObservable& obs, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("finite_time_qt_law: t must be >= 0");
  if (obs.dim() != model.dim()) throw std::invalid_argument("finite_time_qt_law: dimension mismatch");
  const auto& sup = obs.support();
  const std::size_t n = sup.size();
  const SymMatrix l = obs.restricted();
  const SymMatrix m = model.m_stat().select(sup);
  if (!linalg::is_positive_definite(m))
    throw std::invalid_argument("finite_time_qt_law: stationary covariance is not positive definite on the support");

  const Matrix delta_full = lag_cov(model, t).delta;
  const Matrix delta = delta_full.select(sup);

  const SymMatrix lroot = linalg::sym_sqrt(l);
  const SymMatrix nmat = SymMatrix::symmetrized(2.0 * (lroot.matrix() * m.matrix() * lroot.matrix()));
  const Matrix k = linalg::sym_inv_sqrt(nmat).matrix() * lroot.matrix();
  const Matrix kt = k.transposed();

  FiniteTimeQtLaw law;
  law.t = t;
  law.a_block = k * (delta + delta.transposed()) * kt;
  law.b_block = k * (delta - delta.transposed()) * kt;

  // Structural checks: A symmetric, B antisymmetric up to rounding.
  const double scale = std::max(1.0, law.a_block.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(law.a_block(i, j) - law.a_block(j, i)) > 1e-9 * scale ||
          std::abs(law.b_block(i, j) + law.b_block(j, i)) > 1e-9 * scale) {
        std::ostringstream msg;
        msg << "finite_time_qt_law: block symmetry violated at (" << i << "," << j << ")";
        throw NumericalError(msg.str());
      }
    }

  Matrix mt(2 * n, 2 * n);
  Matrix nt(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double id = i == j ? 1.0 : 0.0;
      const double a = 0.5 * (law.a_block(i, j) + law.a_block(j, i));
      const double b = 0.5 * (law.b_block(i, j) - law.b_block(j, i));
      mt(i, j) = id - a;
      mt(n + i, n + j) = id + a;
      mt(i, n + j) = b;
      mt(n + j, i) = b;
      nt(i, n + j) = 0.5 * nmat(i, j);
      nt(n + i, j) = 0.5 * nmat(i, j);
    }
  law.mtilde = SymMatrix::symmetrized(mt);
  law.ntilde = SymMatrix::symmetrized(nt);

  const SymMatrix root = linalg::sym_sqrt(law.mtilde);
  const SymMatrix core = SymMatrix::symmetrized(root.matrix() * law.ntilde.matrix() * root.matrix());
  law.mu = linalg::sym_eigen(core).values;
  return law;
}

std::complex<double> finite_time_qt_charfn(const FiniteTimeQtLaw& law, double alpha) {
  std::complex<double> p = 1.0;
  for (double mu : law.mu) p *= std::sqrt(std::complex<double>(1.0, -2.0 * alpha * mu));
  return 1.0 / p;
}

}  // namespace vgnet::ou
