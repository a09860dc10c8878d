// Serial reference vs OpenMP kernels on the hot pointwise loops of the stepper
// and the norm evaluator.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gplab/kernels.hpp"

namespace {

struct Data {
  std::vector<double> u1, u2, w;
  explicit Data(std::size_t n) : u1(n), u2(n), w(n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd(0, 0.1);
    for (std::size_t i = 0; i < n; ++i) {
      u1[i] = nd(rng);
      u2[i] = nd(rng);
      w[i] = 1e-3 * static_cast<double>(i + 1);
    }
  }
};

template <bool Parallel>
void BM_nonlinear_substep(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      gplab::kernels::nonlinear_substep(d.u1, d.u2, 1e-4);
    } else {
      gplab::kernels::serial::nonlinear_substep(d.u1, d.u2, 1e-4);
    }
    benchmark::DoNotOptimize(d.u1.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_nonlinear_rhs(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  std::vector<double> a(d.u1.size()), b(d.u1.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      gplab::kernels::nonlinear_rhs(d.u1, d.u2, a, b);
    } else {
      gplab::kernels::serial::nonlinear_rhs(d.u1, d.u2, a, b);
    }
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_weighted_power_sum(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    double s = Parallel ? gplab::kernels::weighted_power_sum(d.w, d.u1, 5.0)
                        : gplab::kernels::serial::weighted_power_sum(d.w, d.u1, 5.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_nonlinear_substep<false>)->Name("nonlinear_substep/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_nonlinear_substep<true>)->Name("nonlinear_substep/openmp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_nonlinear_rhs<false>)->Name("nonlinear_rhs/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_nonlinear_rhs<true>)->Name("nonlinear_rhs/openmp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_weighted_power_sum<false>)->Name("weighted_power_sum/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_weighted_power_sum<true>)->Name("weighted_power_sum/openmp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);

BENCHMARK_MAIN();
