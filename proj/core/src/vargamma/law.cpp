#include "vgnet/vargamma/law.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vgnet/error.hpp"
#include "vgnet/linalg/eigen.hpp"

namespace vgnet::vargamma {

VarianceGammaLaw::VarianceGammaLaw(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw std::invalid_argument("VarianceGammaLaw: no eigenvalues");
  for (double l : lambdas_) {
    if (!std::isfinite(l) || !(l > 0.0)) {
      std::ostringstream msg;
      msg << "VarianceGammaLaw: eigenvalues must be positive and finite, got " << l;
      throw std::invalid_argument(msg.str());
    }
  }
  std::sort(lambdas_.begin(), lambdas_.end());
}

bool VarianceGammaLaw::isotropic() const noexcept {
  return lambdas_.back() - lambdas_.front() <= 1e-12 * lambdas_.back();
}

TwoDimParams VarianceGammaLaw::two_dim_params() const {
  if (dim() != 2) throw std::invalid_argument("two_dim_params: law is not two-dimensional");
  return vargamma::two_dim_params(lambdas_[0], lambdas_[1]);
}

TwoDimParams two_dim_params(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
    throw std::invalid_argument("two_dim_params: eigenvalues must be positive");
  if (lambda1 > lambda2) std::swap(lambda1, lambda2);
  // Ratio form keeps ε accurate when λ₁ ≈ λ₂ and avoids overflow in SI units.
  const double r = lambda1 / lambda2;
  TwoDimParams p;
  p.epsilon = (1.0 - r * r) / (1.0 + r * r);
  p.theta = std::sqrt(0.5 * (1.0 / (r * r) + 1.0)) / lambda2;
  return p;
}

VarianceGammaLaw make_vg(const linalg::SymMatrix& l, const linalg::SymMatrix& m) {
  if (l.dim() != m.dim() || l.dim() == 0) {
    std::ostringstream msg;
    msg << "make_vg: dimension mismatch (L is " << l.dim() << ", M is " << m.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
  if (!linalg::is_positive_definite(l)) throw std::invalid_argument("make_vg: L is not positive definite");
  if (!linalg::is_positive_definite(m)) throw std::invalid_argument("make_vg: M is not positive definite");
  const linalg::SymMatrix root = linalg::sym_sqrt(l);
  const linalg::Matrix n = 2.0 * (root.matrix() * m.matrix() * root.matrix());
  const auto eig = linalg::sym_eigen(linalg::SymMatrix::symmetrized(n));
  if (!(eig.values.front() > 0.0))
    throw NumericalError("make_vg: N has a nonpositive eigenvalue after rounding");
  return VarianceGammaLaw(eig.values);
}

double char_fn(const VarianceGammaLaw& law, double alpha) {
  double p = 1.0;
  for (double l : law.lambdas()) p *= 1.0 + alpha * alpha * l * l;
  return 1.0 / std::sqrt(p);
}

std::complex<double> char_fn(const VarianceGammaLaw& law, std::complex<double> alpha) {
  std::complex<double> p = 1.0;
  for (double l : law.lambdas()) p *= std::sqrt(1.0 + alpha * alpha * (l * l));
  return 1.0 / p;
}

double ldp_rate(const VarianceGammaLaw& law, double theta) { return std::abs(theta) / law.lambda_max(); }

std::vector<double> sample(const VarianceGammaLaw& law, numeric::Rng& rng, std::size_t count) {
  numeric::NormalSource normal(rng);
  std::vector<double> out(count);
  for (double& q : out) {
    double s = 0.0;
    for (double l : law.lambdas()) {
      const double u = normal();
      s += l * u * normal();
    }
    q = s;
  }
  return out;
}

}  // namespace vgnet::vargamma
