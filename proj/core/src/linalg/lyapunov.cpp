#include "vgnet/linalg/lyapunov.hpp"

#include <sstream>
#include <stdexcept>

#include "vgnet/error.hpp"
#include "vgnet/linalg/spectrum.hpp"

namespace vgnet::linalg {

namespace {

constexpr std::size_t kMaxDim = 32;

// Column-major vec: vec(M)[i + n*j] = M(i, j).
Matrix kronecker_operator(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix k(n * n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = i + n * j;
      // (a·M)(i,j) = Σ_l a(i,l) M(l,j)
      for (std::size_t l = 0; l < n; ++l) k(row, l + n * j) += a(i, l);
      // (M·aᵀ)(i,j) = Σ_l M(i,l) a(j,l)
      for (std::size_t l = 0; l < n; ++l) k(row, i + n * l) += a(j, l);
    }
  return k;
}

}  // namespace

double lyapunov_residual(const Matrix& a, const SymMatrix& m, const SymMatrix& q) {
  const Matrix r = a * m.matrix() + m.matrix() * a.transposed() + q.matrix();
  return r.max_abs();
}

SymMatrix solve_lyapunov(const Matrix& a, const SymMatrix& q) {
  if (!a.square() || a.rows() != q.dim())
    throw std::invalid_argument("solve_lyapunov: a and q must be square of equal dimension");
  if (a.rows() > kMaxDim) throw std::invalid_argument("solve_lyapunov: dimension exceeds 32");
  if (!a.all_finite()) throw std::invalid_argument("solve_lyapunov: non-finite drift");
  const std::size_t n = a.rows();

  const double abscissa = spectral_abscissa(a);
  if (!(abscissa < 0.0)) {
    std::ostringstream msg;
    msg << "solve_lyapunov: drift is not stable (spectral abscissa " << abscissa << ")";
    throw std::domain_error(msg.str());
  }

  const Matrix k = kronecker_operator(a);
  Matrix rhs(n * n, 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) rhs(i + n * j, 0) = -q(i, j);

  const Matrix x = solve(k, rhs);
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = x(i + n * j, 0);
  SymMatrix result = SymMatrix::symmetrized(m);

  const double scale = q.max_abs();
  const double resid = lyapunov_residual(a, result, q);
  if (resid > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "solve_lyapunov: residual " << resid << " exceeds 1e-10 * " << scale;
    throw NumericalError(msg.str());
  }
  return result;
}

}  // namespace vgnet::linalg
