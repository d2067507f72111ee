#include "vgnet/linalg/expm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace vgnet::linalg {

namespace {

constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// Largest ‖A‖₁ for which the [13/13] Padé approximant is accurate to unit
// roundoff without scaling.
constexpr double kTheta13 = 5.371920351148152;

Matrix taylor(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k < 40; ++k) {
    term = term * a;
    term *= 1.0 / k;
    result += term;
    if (term.max_abs() <= 1e-18 * result.max_abs()) break;
  }
  return result;
}

}  // namespace

Matrix expm(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("expm: matrix is not square");
  if (!a.all_finite()) throw std::invalid_argument("expm: non-finite entry");
  const std::size_t n = a.rows();
  if (n == 0) return a;

  const double norm = norm1(a);
  if (norm < 0.5) return taylor(a);

  int squarings = 0;
  if (norm > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  const Matrix x = a * std::ldexp(1.0, -squarings);

  const Matrix ident = Matrix::identity(n);
  const Matrix x2 = x * x;
  const Matrix x4 = x2 * x2;
  const Matrix x6 = x4 * x2;
  const auto& b = kPade13;

  Matrix u_inner = x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 +
                   b[3] * x2 + b[1] * ident;
  const Matrix u = x * u_inner;
  const Matrix v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 +
                   b[2] * x2 + b[0] * ident;

  Matrix r = solve(v - u, v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

}  // namespace vgnet::linalg
