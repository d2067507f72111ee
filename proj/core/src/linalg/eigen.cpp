#include "vgnet/linalg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vgnet/error.hpp"

namespace vgnet::linalg {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius(const Matrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

}  // namespace

SymEigen sym_eigen(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);
  const double total = frobenius(a);

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= 1e-15 * total || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Skip rotations that would not change the diagonal in floating point.
        if (sweep > 3 && std::abs(apq) < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) {
    std::ostringstream msg;
    msg << "sym_eigen: Jacobi iteration did not converge after " << kMaxSweeps << " sweeps";
    throw NumericalError(msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

SymEigen sym_eigen(const Matrix& m) { return sym_eigen(SymMatrix(m)); }

SymMatrix sym_sqrt(const SymMatrix& m) {
  const SymEigen e = sym_eigen(m);
  const double scale = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  if (e.values.front() < -1e-10 * scale) {
    std::ostringstream msg;
    msg << "sym_sqrt: matrix has negative eigenvalue " << e.values.front();
    throw std::domain_error(msg.str());
  }
  return sym_apply(e, [](double l) { return l > 0.0 ? std::sqrt(l) : 0.0; });
}

SymMatrix sym_inv_sqrt(const SymMatrix& m) {
  const SymEigen e = sym_eigen(m);
  if (!(e.values.front() > 0.0)) {
    std::ostringstream msg;
    msg << "sym_inv_sqrt: matrix is not positive definite (smallest eigenvalue "
        << e.values.front() << ")";
    throw std::domain_error(msg.str());
  }
  return sym_apply(e, [](double l) { return 1.0 / std::sqrt(l); });
}

bool is_positive_definite(const SymMatrix& m) {
  if (m.dim() == 0) return false;
  const SymEigen e = sym_eigen(m);
  return e.values.front() > 1e-14 * std::abs(e.values.back());
}

bool is_positive_semidefinite(const SymMatrix& m, double rel_tol) {
  if (m.dim() == 0) return true;
  const SymEigen e = sym_eigen(m);
  const double scale = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  return e.values.front() >= -rel_tol * scale;
}

Matrix psd_factor(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix work = m.matrix();
  Matrix l(n, n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(work(i, i)));
  const double clamp = 1e-12 * scale;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (work(i, i) > work(piv, piv)) piv = i;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(k, j), work(piv, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(work(j, k), work(j, piv));
      for (std::size_t j = 0; j < k; ++j) std::swap(l(k, j), l(piv, j));
      std::swap(perm[k], perm[piv]);
    }
    const double d = work(k, k);
    if (d < -clamp) {
      std::ostringstream msg;
      msg << "psd_factor: matrix is not positive semidefinite (pivot " << d << ", scale " << scale
          << ")";
      throw NumericalError(msg.str());
    }
    if (d <= clamp) {
      // Largest remaining pivot is numerically zero; the Schur complement is
      // treated as zero.
      for (std::size_t i = k; i < n; ++i) {
        const double dii = work(i, i);
        if (dii < -clamp) {
          std::ostringstream msg;
          msg << "psd_factor: negative remaining pivot " << dii;
          throw NumericalError(msg.str());
        }
      }
      break;
    }
    const double lkk = std::sqrt(d);
    l(k, k) = lkk;
    for (std::size_t i = k + 1; i < n; ++i) l(i, k) = work(i, k) / lkk;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) work(i, j) -= l(i, k) * l(j, k);
  }

  Matrix f(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(perm[i], j) = l(i, j);
  return f;
}

}  // namespace vgnet::linalg
