#pragma once

#include "vgnet/linalg/matrix.hpp"

namespace vgnet::linalg {

/// Matrix exponential by scaling and squaring around a degree-13 Padé
/// approximant; a truncated Taylor series is used directly when ‖a‖₁ < 0.5.
Matrix expm(const Matrix& a);

}  // namespace vgnet::linalg
