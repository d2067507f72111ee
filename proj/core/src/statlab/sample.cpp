#include "vgnet/statlab/sample.hpp"

#include <exception>
#include <stdexcept>
#include <thread>

#include "vgnet/numeric/random.hpp"
#include "vgnet/ou/sampling.hpp"

namespace vgnet::statlab {

void parallel_blocks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (workers == 0) throw std::invalid_argument("parallel_blocks: workers must be positive");
  auto begin = [&](std::size_t w) { return w * count / workers; };
  if (workers == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w, begin(w), begin(w + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

EmpiricalSample sample_qt(const ou::LinearSDEModel& model, const ou::QuadraticObservable& obs, double t,
                          std::size_t count, std::uint64_t seed, std::size_t workers) {
  if (obs.dim() != model.dim()) throw std::invalid_argument("sample_qt: dimension mismatch");
  const ou::StationaryPairSampler sampler(model, t);
  EmpiricalSample out;
  out.t = t;
  out.seed = seed;
  out.workers = workers;
  out.values.resize(count);
  parallel_blocks(count, workers, [&](std::size_t w, std::size_t lo, std::size_t hi) {
    auto rng = numeric::make_stream(seed, w);
    std::vector<double> x0(model.dim()), xt(model.dim());
    for (std::size_t i = lo; i < hi; ++i) {
      sampler.draw(rng, x0, xt);
      out.values[i] = t == 0.0 ? 0.0 : obs.evaluate(xt) - obs.evaluate(x0);
    }
  });
  return out;
}

}  // namespace vgnet::statlab
