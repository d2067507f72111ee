#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace vgnet::numeric {

using Rng = std::mt19937_64;

/// Independent stream for a worker, derived from the master seed through
/// std::seed_seq so that (seed, worker) pairs do not overlap trivially.
Rng make_stream(std::uint64_t seed, std::uint64_t worker = 0);

/// Standard normal draws on top of a caller-owned engine.
class NormalSource {
 public:
  explicit NormalSource(Rng& rng) : rng_(rng) {}
  double operator()() { return dist_(rng_); }
  void fill(std::span<double> out) {
    for (double& v : out) v = dist_(rng_);
  }

 private:
  Rng& rng_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace vgnet::numeric
