#include <benchmark/benchmark.h>

#include "gkdpp/kernel_matrix.hpp"
#include "gkdpp/sampler.hpp"

namespace {

using gkdpp::AdmissibleParams;
using gkdpp::Complex;
using gkdpp::Window;

void BM_SamplerDraw(benchmark::State& state) {
  const auto p = AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.4, -0.7));
  const auto k =
      gkdpp::gamma_kernel_matrix(p, Window::symmetric(static_cast<int>(state.range(0))));
  const gkdpp::ProjectionSampler sampler(k);
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.draw(7, index++));
  }
}
BENCHMARK(BM_SamplerDraw)->Arg(10)->Arg(30)->Arg(60);

void BM_Truncate(benchmark::State& state) {
  const auto p = AdmissibleParams::make(Complex(0.2, 0.0), Complex(0.6, 0.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkdpp::gamma_kernel_matrix(
        p, Window::symmetric(static_cast<int>(state.range(0)))));
  }
}
BENCHMARK(BM_Truncate)->Arg(20)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
