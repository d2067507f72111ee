#include "vgnet/ou/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vgnet/linalg/eigen.hpp"
#include "vgnet/linalg/expm.hpp"
#include "vgnet/linalg/lyapunov.hpp"
#include "vgnet/linalg/spectrum.hpp"
#include "vgnet/numeric/quadrature.hpp"

namespace vgnet::ou {

using linalg::Matrix;
using linalg::SymMatrix;

LinearSDEModel build_model(const Matrix& a, const Matrix& b) {
  if (!a.square() || a.rows() == 0) throw std::invalid_argument("build_model: drift must be square and nonempty");
  if (b.rows() != a.rows() || b.cols() == 0) {
    std::ostringstream msg;
    msg << "build_model: noise has shape " << b.rows() << "x" << b.cols() << ", expected " << a.rows()
        << " rows";
    throw std::invalid_argument(msg.str());
  }
  if (!a.all_finite() || !b.all_finite()) throw std::invalid_argument("build_model: non-finite entries");

  LinearSDEModel model;
  model.a_ = a;
  model.b_ = b;
  model.abscissa_ = linalg::spectral_abscissa(a);
  if (!(model.abscissa_ < 0.0)) {
    std::ostringstream msg;
    msg << "build_model: drift is not stable (spectral abscissa " << model.abscissa_ << ")";
    throw std::domain_error(msg.str());
  }
  const SymMatrix q = SymMatrix::symmetrized(b * b.transposed());
  model.m_ = linalg::solve_lyapunov(a, q);
  const double qscale = q.max_abs();
  model.residual_ = qscale > 0.0 ? linalg::lyapunov_residual(a, model.m_, q) / qscale : 0.0;

  const auto ctrl = linalg::is_controllable(a, b);
  model.controllable_ = ctrl.controllable;
  model.rank_ = ctrl.rank;
  model.m_pd_ = linalg::is_positive_definite(model.m_);
  if (!model.controllable_) {
    std::ostringstream msg;
    msg << "(A,B) is not controllable (Krylov rank " << ctrl.rank << " of " << ctrl.dim
        << "); stationary covariance is only positive semidefinite";
    model.warnings_.push_back(msg.str());
  }
  return model;
}

LagCovariance lag_cov(const LinearSDEModel& model, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("lag_cov: t must be finite and >= 0");
  return {t, linalg::expm(model.a() * t) * model.m_stat().matrix()};
}

SymMatrix stationary_covariance_quadrature(const Matrix& a, const Matrix& b, double rel_tol) {
  const double abscissa = linalg::spectral_abscissa(a);
  if (!(abscissa < 0.0)) throw std::domain_error("stationary_covariance_quadrature: drift is not stable");
  const std::size_t n = a.rows();
  const Matrix q = b * b.transposed();
  // Panel width resolves the fastest mode; GL degree 24 per panel.
  const double width = 1.0 / std::max(linalg::norm1(a), 1e-300);
  const auto& rule = numeric::gauss_legendre(24);
  std::vector<Matrix> local;
  for (double x : rule.nodes) local.push_back(linalg::expm(a * (0.5 * width * (x + 1.0))));
  const Matrix step = linalg::expm(a * width);

  Matrix total(n, n);
  Matrix start = Matrix::identity(n);  // e^{kwA}
  const double decay_time = 40.0 / -abscissa;
  for (std::size_t panel = 0;; ++panel) {
    Matrix contrib(n, n);
    for (std::size_t i = 0; i < local.size(); ++i) {
      const Matrix e = start * local[i];
      contrib += (e * q * e.transposed()) * (0.5 * width * rule.weights[i]);
    }
    total += contrib;
    start = start * step;
    const double elapsed = static_cast<double>(panel + 1) * width;
    if (contrib.max_abs() <= rel_tol * total.max_abs() && elapsed > 1.0 / -abscissa) break;
    if (elapsed > decay_time * 10.0) break;
  }
  return SymMatrix::symmetrized(total);
}

}  // namespace vgnet::ou
