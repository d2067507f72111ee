#pragma once

#include <stdexcept>
#include <string>

namespace vgnet {

/// Raised when a computation fails to meet its stated accuracy or an
/// iterative method does not converge. Input validation failures use
/// std::invalid_argument / std::domain_error instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vgnet
