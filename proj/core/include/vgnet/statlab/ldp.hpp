#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vgnet/ou/model.hpp"
#include "vgnet/ou/observable.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet::statlab {

/// Open interval O = (a, b). Either 0 < a < b, a < b < 0, or a < 0 < b.
struct LdpWindow {
  double a = 0.0;
  double b = 0.0;
  bool contains_zero() const noexcept { return a < 0.0 && 0.0 < b; }
};

/// −inf_{θ∈O} |θ|/λ_n: 0 if 0 ∈ O, otherwise −dist(0, O)/λ_n.
double ldp_theory(const vargamma::VarianceGammaLaw& law, const LdpWindow& window);

struct LdpPoint {
  double t = 0.0;
  std::size_t hits = 0;
  double probability = 0.0;     // hits / count
  double estimate = 0.0;        // (1/t) log probability; −inf with no hits
  double lower = 0.0;           // Wilson 95% bounds mapped through (1/t) log
  double upper = 0.0;
  bool lower_bound_only = false;  // no hits: only the upper bound is informative
};

struct LdpEstimate {
  LdpWindow window;
  std::vector<LdpPoint> points;
  double theoretical = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  /// Hits at the largest t reach 30 (enough for a usable estimate).
  bool enough_hits = false;
};

/// For each t, the fraction of `count` exact draws of Q_t inside tO. Hits
/// are counted on the fly; no sample is stored. Worker streams follow
/// sample_qt, with the seed offset by the index of t.
LdpEstimate ldp_scan(const ou::LinearSDEModel& model, const ou::QuadraticObservable& obs, const LdpWindow& window,
                     const std::vector<double>& t_list, std::size_t count, std::uint64_t seed,
                     std::size_t workers = 1);

/// The point with the largest t that has at least `min_hits` hits.
std::optional<LdpPoint> best_point(const LdpEstimate& est, std::size_t min_hits = 30);

struct WilsonInterval {
  double lower = 0.0;
  double upper = 0.0;
};

WilsonInterval wilson_interval(std::size_t hits, std::size_t count, double z = 1.959963984540054);

}  // namespace vgnet::statlab
