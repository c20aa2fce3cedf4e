// Serial reference loops against their OpenMP counterparts. Run with
// OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "plankton/kernels.hpp"

namespace {

using namespace plankton;

template <auto Kernel>
void BM_Lyapunov(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(Params{0.3, 0.9}, LyapunovTheorem::Coexistence, grid));
  }
  state.SetItemsProcessed(state.iterations() * grid * grid);
}

template <auto Kernel>
void BM_MInvariance(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(Params{0.3, 0.9}, grid));
  state.SetItemsProcessed(state.iterations() * grid * grid);
}

template <auto Kernel>
void BM_LaSalle(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(Params{0.3, 0.9}, LaSalleFunction::Coexistence, grid));
  }
  state.SetItemsProcessed(state.iterations() * grid * grid);
}

template <auto Kernel>
void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(GridSpec{0.01, 1.0, n}, GridSpec{0.01, 2.5, n}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}

BENCHMARK(BM_Lyapunov<kernels::serial::lyapunov_grid>)->Name("lyapunov/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_Lyapunov<kernels::lyapunov_grid>)->Name("lyapunov/omp")->Arg(100)->Arg(400);
BENCHMARK(BM_MInvariance<kernels::serial::m_invariance_grid>)->Name("m_invariance/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_MInvariance<kernels::m_invariance_grid>)->Name("m_invariance/omp")->Arg(100)->Arg(400);
BENCHMARK(BM_LaSalle<kernels::serial::lasalle_grid>)->Name("lasalle/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_LaSalle<kernels::lasalle_grid>)->Name("lasalle/omp")->Arg(100)->Arg(400);
BENCHMARK(BM_Sweep<kernels::serial::parameter_sweep>)->Name("sweep/serial")->Arg(50)->Arg(200);
BENCHMARK(BM_Sweep<kernels::parameter_sweep>)->Name("sweep/omp")->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
