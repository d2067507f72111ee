#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "vgnet/linalg/expm.hpp"
#include "vgnet/linalg/lyapunov.hpp"
#include "vgnet/linalg/matrix.hpp"
#include "vgnet/networks/rc_circuit.hpp"
#include "vgnet/numeric/random.hpp"
#include "vgnet/specfun/bessel.hpp"
#include "vgnet/statlab/sample.hpp"
#include "vgnet/vargamma/cdf.hpp"
#include "vgnet/vargamma/density.hpp"
#include "vgnet/vargamma/law.hpp"

namespace vgnet {
namespace {

using linalg::Matrix;
using linalg::SymMatrix;

Matrix stable(std::size_t n) {
  auto rng = numeric::make_stream(5);
  numeric::NormalSource z(rng);
  Matrix s(n, n), k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s(i, j) = z();
      k(i, j) = z();
    }
  return (s * s.transposed()) * (-1.0 / n) - Matrix::identity(n) * 0.5 + (k - k.transposed());
}

networks::RCCircuitSpec figure2() { return {1e8, 1e8, 1e-10, 6.8e-10, 4.2e-10, 88.0, 296.0}; }

void BM_BesselIntegral(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_k_integral(0.3, x));
    x = x < 30.0 ? x * 1.1 : 0.1;
  }
}
BENCHMARK(BM_BesselIntegral);

void BM_BesselHalfInteger(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_k_half_integer(static_cast<int>(state.range(0)), 3.0));
}
BENCHMARK(BM_BesselHalfInteger)->Arg(0)->Arg(5)->Arg(20);

void BM_BesselAsymptotic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_k_asymptotic(1.0, 50.0, 12));
}
BENCHMARK(BM_BesselAsymptotic);

void BM_DensityTwoDim(benchmark::State& state) {
  const auto p = vargamma::two_dim_params(0.7, 1.6);
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vargamma::density_two_dim(p, s));
    s = s < 20.0 ? s + 0.37 : 0.0;
  }
}
BENCHMARK(BM_DensityTwoDim);

void BM_FourierDensityBuild(benchmark::State& state) {
  std::vector<double> l;
  for (int k = 0; k < state.range(0); ++k) l.push_back(0.4 + 0.3 * k);
  const vargamma::VarianceGammaLaw law(l);
  for (auto _ : state) {
    vargamma::FourierDensity f(law);
    benchmark::DoNotOptimize(f.grid_size());
  }
}
BENCHMARK(BM_FourierDensityBuild)->Arg(3)->Arg(6);

void BM_FourierDensityEval(benchmark::State& state) {
  const vargamma::VarianceGammaLaw law({0.4, 0.7, 1.0, 1.3});
  const vargamma::FourierDensity f(law);
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(s));
    s = s < 30.0 ? s + 0.37 : 0.0;
  }
}
BENCHMARK(BM_FourierDensityEval);

void BM_VgCdfBuild(benchmark::State& state) {
  const vargamma::VarianceGammaLaw law({0.7, 1.6});
  for (auto _ : state) {
    vargamma::VgCdf cdf(law);
    benchmark::DoNotOptimize(cdf(1.0));
  }
}
BENCHMARK(BM_VgCdfBuild);

void BM_Lyapunov(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = stable(n);
  const SymMatrix q = SymMatrix::identity(n);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::solve_lyapunov(a, q));
}
BENCHMARK(BM_Lyapunov)->Arg(2)->Arg(8)->Arg(16);

void BM_Expm(benchmark::State& state) {
  const Matrix a = stable(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::expm(a));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(16);

void BM_SampleRcHeat(benchmark::State& state) {
  const auto spec = figure2();
  const auto model = networks::rc_model(spec);
  const auto obs = networks::rc_heat_observable(spec);
  for (auto _ : state) {
    auto s = statlab::sample_qt(model, obs, 0.2, static_cast<std::size_t>(state.range(0)), 1);
    benchmark::DoNotOptimize(s.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleRcHeat)->Arg(10000);

void BM_SampleVg(benchmark::State& state) {
  const vargamma::VarianceGammaLaw law({0.7, 1.6});
  auto rng = numeric::make_stream(3);
  for (auto _ : state) benchmark::DoNotOptimize(vargamma::sample(law, rng, 10000));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleVg);

}  // namespace
}  // namespace vgnet

BENCHMARK_MAIN();
