#include "vgnet/ou/observable.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vgnet/linalg/eigen.hpp"

namespace vgnet::ou {

std::string_view to_string(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::kKinetic:
      return "kinetic";
    case ObservableKind::kTotalEnergy:
      return "total";
    case ObservableKind::kRcHeat:
      return "rc-heat";
    case ObservableKind::kCustom:
      break;
  }
  return "custom";
}

QuadraticObservable::QuadraticObservable(linalg::SymMatrix l, ObservableKind kind)
    : l_(std::move(l)), kind_(kind) {
  const std::size_t n = l_.dim();
  if (n == 0) throw std::invalid_argument("QuadraticObservable: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < n && !nonzero; ++j) nonzero = l_(i, j) != 0.0;
    if (nonzero) support_.push_back(i);
  }
  if (support_.empty()) throw std::invalid_argument("QuadraticObservable: L is zero");
  if (!linalg::is_positive_definite(restricted()))
    throw std::invalid_argument("QuadraticObservable: L is not positive definite on its support");
}

double QuadraticObservable::evaluate(std::span<const double> x) const {
  if (x.size() != dim()) throw std::invalid_argument("QuadraticObservable: state has wrong size");
  double s = 0.0;
  for (std::size_t i : support_) {
    double row = 0.0;
    for (std::size_t j : support_) row += l_(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

vargamma::VarianceGammaLaw limit_law(const LinearSDEModel& model, const QuadraticObservable& obs) {
  if (obs.dim() != model.dim()) {
    std::ostringstream msg;
    msg << "limit_law: observable dimension " << obs.dim() << " differs from model dimension "
        << model.dim();
    throw std::invalid_argument(msg.str());
  }
  return vargamma::make_vg(obs.restricted(), model.m_stat().select(obs.support()));
}

}  // namespace vgnet::ou
