#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "vgnet/linalg/matrix.hpp"
#include "vgnet/ou/model.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::ou {

enum class ObservableKind { kCustom, kKinetic, kTotalEnergy, kRcHeat };

std::string_view to_string(ObservableKind kind);

/// Quadratic form x ↦ x·Lx on the full state space. The support is the set
/// of coordinates whose row of L is nonzero; L restricted to the support
/// must be positive definite.
class QuadraticObservable {
 public:
  explicit QuadraticObservable(linalg::SymMatrix l, ObservableKind kind = ObservableKind::kCustom);

  const linalg::SymMatrix& l() const noexcept { return l_; }
  ObservableKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return l_.dim(); }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  /// Principal submatrix on the support.
  linalg::SymMatrix restricted() const { return l_.select(support_); }

  double evaluate(std::span<const double> x) const;

 private:
  linalg::SymMatrix l_;
  ObservableKind kind_;
  std::vector<std::size_t> support_;
};

/// Variance-gamma limit of Q_t: make_vg of L and M restricted to the
/// support. Requires M positive definite there.
vargamma::VarianceGammaLaw limit_law(const LinearSDEModel& model, const QuadraticObservable& obs);

}  // namespace vgnet::ou
