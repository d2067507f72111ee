#include "vgnet/statlab/ldp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "vgnet/numeric/random.hpp"
#include "vgnet/ou/sampling.hpp"
#include "vgnet/statlab/sample.hpp"

namespace vgnet::statlab {

namespace {

void check_window(const LdpWindow& w) {
  if (!std::isfinite(w.a) || !std::isfinite(w.b) || !(w.a < w.b))
    throw std::invalid_argument("LDP window must satisfy a < b with finite ends");
  if (w.a == 0.0 || w.b == 0.0)
    throw std::invalid_argument("LDP window: 0 must be either inside the window or outside its closure");
}

}  // namespace

double ldp_theory(const vargamma::VarianceGammaLaw& law, const LdpWindow& window) {
  check_window(window);
  if (window.contains_zero()) return 0.0;
  const double dist = window.a > 0.0 ? window.a : -window.b;
  return -dist / law.lambda_max();
}

WilsonInterval wilson_interval(std::size_t hits, std::size_t count, double z) {
  if (count == 0) throw std::invalid_argument("wilson_interval: count must be positive");
  const double n = static_cast<double>(count);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // The bounds touch 0 and 1 exactly at the extreme counts.
  const double lower = hits == 0 ? 0.0 : std::max(0.0, center - half);
  const double upper = hits == count ? 1.0 : std::min(1.0, center + half);
  return {lower, upper};
}

LdpEstimate ldp_scan(const ou::LinearSDEModel& model, const ou::QuadraticObservable& obs, const LdpWindow& window,
                     const std::vector<double>& t_list, std::size_t count, std::uint64_t seed, std::size_t workers) {
  check_window(window);
  if (t_list.empty()) throw std::invalid_argument("ldp_scan: empty t list");
  for (std::size_t k = 0; k < t_list.size(); ++k) {
    if (!(t_list[k] > 0.0) || !std::isfinite(t_list[k])) throw std::invalid_argument("ldp_scan: times must be positive");
    if (k > 0 && !(t_list[k] > t_list[k - 1])) throw std::invalid_argument("ldp_scan: times must be increasing");
  }
  if (count == 0) throw std::invalid_argument("ldp_scan: count must be positive");

  LdpEstimate est;
  est.window = window;
  est.theoretical = ldp_theory(ou::limit_law(model, obs), window);
  est.count = count;
  est.seed = seed;
  est.workers = workers;

  for (std::size_t k = 0; k < t_list.size(); ++k) {
    const double t = t_list[k];
    const ou::StationaryPairSampler sampler(model, t);
    const double lo = t * window.a, hi = t * window.b;
    std::vector<std::size_t> hits(workers, 0);
    parallel_blocks(count, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
      auto rng = numeric::make_stream(seed + k, w);
      std::vector<double> x0(model.dim()), xt(model.dim());
      std::size_t local = 0;
      for (std::size_t i = begin; i < end; ++i) {
        sampler.draw(rng, x0, xt);
        const double q = obs.evaluate(xt) - obs.evaluate(x0);
        if (q > lo && q < hi) ++local;
      }
      hits[w] = local;
    });
    LdpPoint p;
    p.t = t;
    for (std::size_t h : hits) p.hits += h;
    p.probability = static_cast<double>(p.hits) / static_cast<double>(count);
    const auto ci = wilson_interval(p.hits, count);
    const double inf = std::numeric_limits<double>::infinity();
    p.estimate = p.hits == 0 ? -inf : std::log(p.probability) / t;
    p.lower = ci.lower > 0.0 ? std::log(ci.lower) / t : -inf;
    p.upper = std::log(ci.upper) / t;
    p.lower_bound_only = p.hits == 0;
    est.points.push_back(p);
  }
  est.enough_hits = est.points.back().hits >= 30;
  return est;
}

std::optional<LdpPoint> best_point(const LdpEstimate& est, std::size_t min_hits) {
  for (auto it = est.points.rbegin(); it != est.points.rend(); ++it)
    if (it->hits >= min_hits) return *it;
  return std::nullopt;
}

}  // namespace vgnet::statlab
