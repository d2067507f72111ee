#include "vgnet/linalg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vgnet/error.hpp"

namespace vgnet::linalg {

namespace {

using cplx = std::complex<double>;

constexpr std::size_t kMaxDim = 32;
constexpr int kMaxIterations = 5000;

// Monic characteristic polynomial coefficients c[0..n], c[n] = 1.
std::vector<double> faddeev_leverrier(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(a * mk).trace() / static_cast<double>(k);
  }
  return c;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx p = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) p = p * z + c[k];
  return p;
}

double horner_abs_bound(const std::vector<cplx>& c, double r) {
  double p = std::abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) p = p * r + std::abs(c[k]);
  return p;
}

struct DkResult {
  std::vector<cplx> roots;
  std::vector<double> radius;  // inclusion radii n·|W_i|
};

DkResult durand_kerner(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k)
    radius = std::max(radius, std::pow(std::abs(c[n - k]), 1.0 / static_cast<double>(k)));
  radius = std::max(2.0 * radius, 1e-3);

  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < kMaxIterations; ++it) {
    double max_step = 0.0;
    bool residual_small = true;
    for (std::size_t i = 0; i < n; ++i) {
      cplx denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      const cplx p = horner(c, z[i]);
      if (std::abs(p) > 64.0 * eps * horner_abs_bound(c, std::abs(z[i]))) residual_small = false;
      if (denom == cplx(0.0)) denom = cplx(eps, eps);
      const cplx step = p / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (max_step <= 1e-15 || (residual_small && it > 10)) {
      DkResult out{z, std::vector<double>(n)};
      for (std::size_t i = 0; i < n; ++i) {
        cplx denom = 1.0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) denom *= (z[i] - z[j]);
        const cplx p = horner(c, z[i]);
        out.radius[i] = denom == cplx(0.0) ? std::numeric_limits<double>::infinity()
                                           : static_cast<double>(n) * std::abs(p / denom);
      }
      return out;
    }
  }
  std::ostringstream msg;
  msg << "eigenvalues: Durand-Kerner did not converge after " << kMaxIterations << " iterations";
  throw NumericalError(msg.str());
}

// Trace of (a − λI)^{-1} via complex LU; returns false if singular.
bool resolvent_trace(const Matrix& a, cplx lambda, cplx& trace) {
  const std::size_t n = a.rows();
  std::vector<cplx> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j) - (i == j ? lambda : cplx(0.0));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
    if (std::abs(m[piv * n + k]) == 0.0) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      std::swap(perm[k], perm[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = m[i * n + k] / m[k * n + k];
      m[i * n + k] = l;
      for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] -= l * m[k * n + j];
    }
  }
  trace = 0.0;
  std::vector<cplx> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (perm[i] == col) ? 1.0 : 0.0;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) x[i] -= m[i * n + k] * x[k];
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= m[ii * n + k] * x[k];
      x[ii] /= m[ii * n + ii];
    }
    trace += x[col];
  }
  return std::isfinite(trace.real()) && std::isfinite(trace.imag());
}

void newton_polish(const Matrix& a, std::vector<cplx>& roots) {
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sep = std::min(sep, std::abs(roots[i] - roots[j]));
    if (sep < 1e-4 * (1.0 + std::abs(roots[i]))) continue;  // clustered: leave as is
    cplx z = roots[i];
    double last = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
      cplx tr;
      if (!resolvent_trace(a, z, tr) || std::abs(tr) == 0.0) break;
      // d/dλ log det(a − λI) = −tr((a − λI)^{-1})
      const cplx step = 1.0 / tr;
      if (!(std::abs(step) < last) || std::abs(step) > 0.25 * sep) break;
      z += step;
      last = std::abs(step);
      if (last <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    roots[i] = z;
  }
}


bool clustered(const std::vector<cplx>& roots, const std::vector<double>& radius) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double d = std::abs(roots[i] - roots[j]);
      if (!(d > radius[i] + radius[j]) || d < 1e-4 * (1.0 + std::abs(roots[i]))) return true;
    }
  return false;
}

// Fallback for multiple or clustered eigenvalues: balancing, elimination to
// Hessenberg form, then Francis double-shift QR. 1-based indexing internally.
std::vector<cplx> hessenberg_qr(const Matrix& input) {
  const int n = static_cast<int>(input.rows());
  std::vector<double> store((n + 1) * (n + 1), 0.0);
  auto a = [&](int i, int j) -> double& { return store[i * (n + 1) + j]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i, j) = input(i - 1, j - 1);

  // balance
  for (bool done = false; !done;) {
    done = true;
    for (int i = 1; i <= n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 1; j <= n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0, f = 1.0;
      const double total = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * total) {
        done = false;
        for (int j = 1; j <= n; ++j) a(i, j) /= f;
        for (int j = 1; j <= n; ++j) a(j, i) *= f;
      }
    }
  }

  // Hessenberg by stabilized elimination
  for (int m = 2; m < n; ++m) {
    double x = 0.0;
    int piv = m;
    for (int j = m; j <= n; ++j)
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        piv = j;
      }
    if (piv != m) {
      for (int j = m - 1; j <= n; ++j) std::swap(a(piv, j), a(m, j));
      for (int j = 1; j <= n; ++j) std::swap(a(j, piv), a(j, m));
    }
    if (x == 0.0) continue;
    for (int i = m + 1; i <= n; ++i) {
      double y = a(i, m - 1);
      if (y == 0.0) continue;
      y /= x;
      a(i, m - 1) = 0.0;
      for (int j = m; j <= n; ++j) a(i, j) -= y * a(m, j);
      for (int j = 1; j <= n; ++j) a(j, m) += y * a(j, i);
    }
  }

  std::vector<cplx> out(n);
  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));
  int nn = n;
  double t = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        out[nn - 1] = cplx(x + t, 0.0);
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            out[nn - 2] = out[nn - 1] = cplx(x + z, 0.0);
            if (z != 0.0) out[nn - 1] = cplx(x - w / z, 0.0);
          } else {
            out[nn - 2] = cplx(x + p, z);
            out[nn - 1] = cplx(x + p, -z);
          }
          nn -= 2;
        } else {
          if (its == 60) throw NumericalError("eigenvalues: QR iteration did not converge");
          if (its == 10 || its == 20 || its == 40) {  // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int mmin = std::min(nn, k + 3);
            for (int i = l; i <= mmin; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("eigenvalues: matrix is not square");
  if (a.rows() == 0) throw std::invalid_argument("eigenvalues: empty matrix");
  if (a.rows() > kMaxDim) throw std::invalid_argument("eigenvalues: dimension exceeds 32");
  if (!a.all_finite()) throw std::invalid_argument("eigenvalues: non-finite entry");
  const std::size_t n = a.rows();
  const double scale = a.max_abs();
  if (scale == 0.0) return std::vector<cplx>(n, cplx(0.0));
  if (n == 1) return {cplx(a(0, 0))};

  const Matrix scaled = a * (1.0 / scale);
  const auto real_coeff = faddeev_leverrier(scaled);
  auto dk = durand_kerner(std::vector<cplx>(real_coeff.begin(), real_coeff.end()));
  std::vector<cplx> roots = std::move(dk.roots);
  if (clustered(roots, dk.radius)) {
    roots = hessenberg_qr(scaled);
  } else {
    newton_polish(scaled, roots);
  }
  for (auto& r : roots) {
    // Real matrices: snap negligible imaginary parts.
    if (std::abs(r.imag()) <= 1e-13 * (1.0 + std::abs(r.real()))) r = cplx(r.real(), 0.0);
    r *= scale;
  }
  return roots;
}

double spectral_abscissa(const Matrix& a) {
  const auto ev = eigenvalues(a);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : ev) best = std::max(best, z.real());
  return best;
}

ControllabilityReport is_controllable(const Matrix& a, const Matrix& b) {
  if (!a.square() || a.rows() != b.rows())
    throw std::invalid_argument("is_controllable: incompatible shapes");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  ControllabilityReport report;
  report.dim = n;
  if (n == 0) {
    report.controllable = true;
    return report;
  }
  const double bs = b.max_abs();
  if (bs == 0.0) return report;
  const double as = a.max_abs();
  const Matrix an = as > 0.0 ? a * (1.0 / as) : a;

  // Krylov columns [b, ab, …, a^{n−1}b], each block normalized.
  std::vector<std::vector<double>> cols;
  Matrix blk = b * (1.0 / bs);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<double> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = blk(i, j);
      cols.push_back(std::move(c));
    }
    blk = an * blk;
  }

  auto norm = [](const std::vector<double>& v) { return std::sqrt(dot(v, v)); };
  double first = 0.0;
  for (const auto& c : cols) first = std::max(first, norm(c));
  const double tol = 1e-10 * first;

  std::vector<std::vector<double>> basis;
  std::vector<bool> used(cols.size(), false);
  while (basis.size() < n) {
    std::size_t piv = cols.size();
    double best = tol;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (used[k]) continue;
      const double nk = norm(cols[k]);
      if (nk > best) {
        best = nk;
        piv = k;
      }
    }
    if (piv == cols.size()) break;
    used[piv] = true;
    std::vector<double> q = cols[piv];
    for (double& v : q) v /= best;
    basis.push_back(q);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (used[k]) continue;
      for (int pass = 0; pass < 2; ++pass) {
        const double proj = dot(q, cols[k]);
        for (std::size_t i = 0; i < n; ++i) cols[k][i] -= proj * q[i];
      }
    }
  }
  report.rank = basis.size();
  report.controllable = report.rank == n;
  return report;
}

}  // namespace vgnet::linalg
