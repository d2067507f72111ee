#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"

namespace vgnet::statlab {

/// Draws of Q_t = X_t·LX_t − X_0·LX_0 from the exact stationary joint law.
struct EmpiricalSample {
  std::vector<double> values;
  double t = 0.0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t count() const noexcept { return values.size(); }
};

/// Worker w fills the contiguous block [w·count/W, (w+1)·count/W) from
/// numeric::make_stream(seed, w), so the result depends only on
/// (model, observable, t, count, seed, workers).
EmpiricalSample sample_qt(const ou::LinearSDEModel& model, const ou::QuadraticObservable& obs, double t,
                          std::size_t count, std::uint64_t seed, std::size_t workers = 1);

/// Runs body(worker, begin, end) for the blocks above on `workers` threads
/// (inline when workers == 1). Exceptions from workers are rethrown.
void parallel_blocks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace vgnet::statlab
