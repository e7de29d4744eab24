#include <benchmark/benchmark.h>

#include "gkdpp/gamma_kernel.hpp"

namespace {

using gkdpp::AdmissibleParams;
using gkdpp::Complex;
using gkdpp::LatticePoint;

const AdmissibleParams& principal() {
  static const auto p =
      AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.4, -0.7));
  return p;
}

void BM_KernelEntry(benchmark::State& state) {
  const auto& p = principal();
  long long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gkdpp::kernel_entry(p, LatticePoint{k % 40 - 20}, LatticePoint{3}));
    ++k;
  }
}
BENCHMARK(BM_KernelEntry);

void BM_KernelSeries(benchmark::State& state) {
  const auto& p = principal();
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gkdpp::kernel_series(p, LatticePoint{2}, LatticePoint{-3}, tol));
  }
}
BENCHMARK(BM_KernelSeries)->Arg(6)->Arg(9)->Arg(12);

void BM_BasisG(benchmark::State& state) {
  const auto& p = principal();
  long long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gkdpp::basis_g(p, 3, LatticePoint{k % 2000}));
    ++k;
  }
}
BENCHMARK(BM_BasisG);

}  // namespace
