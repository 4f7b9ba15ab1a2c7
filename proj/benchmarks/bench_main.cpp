#include <benchmark/benchmark.h>

#include "support/random_poly.hpp"
#include "wwm/moyal.hpp"
#include "wwm/wigner.hpp"

namespace {

using namespace wwm;

void BM_Star(benchmark::State& state) {
  testing::PolyGen gen(11);
  const auto deg = static_cast<unsigned>(state.range(0));
  const PhasePoly f = gen.symbol(deg), g = gen.symbol(deg);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g));
}
BENCHMARK(BM_Star)->DenseRange(2, 8, 2);

void BM_OperatorProduct(benchmark::State& state) {
  testing::PolyGen gen(12);
  const auto deg = static_cast<unsigned>(state.range(0));
  const OpPoly a = gen.op(deg), b = gen.op(deg);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_OperatorProduct)->DenseRange(2, 8, 2);

void BM_Dequantize(benchmark::State& state) {
  testing::PolyGen gen(13);
  const OpPoly a = gen.op(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dequantize(a));
}
BENCHMARK(BM_Dequantize)->DenseRange(2, 8, 2);

void BM_WeylQuantize(benchmark::State& state) {
  testing::PolyGen gen(14);
  const PhasePoly f = gen.symbol(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_quantize(f));
}
BENCHMARK(BM_WeylQuantize)->DenseRange(2, 8, 2);

void BM_WignerGrid(benchmark::State& state) {
  const DensityMatrix u = fock_state(static_cast<int>(state.range(0)), 32);
  GridSpec grid;
  grid.nq = grid.np = 129;
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(u, grid));
}
BENCHMARK(BM_WignerGrid)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TraceExpectation(benchmark::State& state) {
  const DensityMatrix u = fock_state(3, static_cast<int>(state.range(0)));
  const OpPoly h2 = pow(operators::oscillator_hamiltonian(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(trace_expectation(u, h2));
}
BENCHMARK(BM_TraceExpectation)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
