// Serial reference against OpenMP path for the quadrature kernels and a trial batch.
#include <benchmark/benchmark.h>

#include <random>

#include "radlie/kernels.hpp"
#include "radlie/lab.hpp"

using namespace radlie;

namespace {

Matrix bench_matrix(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_gaussian(n, n, rng) / std::sqrt(2.0 * n);
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_CauchySum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix a = bench_matrix(n, 1);
  CircleNodes circle;
  circle.radius = 3.0;
  circle.nodes = 512;
  const ScalarFunction f = [](Complex z) { return std::exp(z); };
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_sum(a, circle, f, exec_of(state)));
  state.SetLabel(exec_of(state) == Execution::serial ? "serial" : "parallel");
}

void BM_RosenblumSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix a1 = bench_matrix(n, 2) + 4.0 * identity(n);
  const Matrix a2 = bench_matrix(n, 3);
  const Matrix y = bench_matrix(n, 4);
  CircleNodes circle;
  circle.radius = 2.0;
  circle.nodes = 512;
  for (auto _ : state) benchmark::DoNotOptimize(rosenblum_sum(a1, a2, Complex(0.0, 0.0), y, circle, exec_of(state)));
  state.SetLabel(exec_of(state) == Execution::serial ? "serial" : "parallel");
}

void BM_TrialBatch(benchmark::State& state) {
  InstanceSpec spec;
  spec.trials = 32;
  spec.jobs = state.range(1) == 0 ? 1 : 0;
  const std::string suite = state.range(0) == 0 ? "t43" : "rosenblum";
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, spec));
  state.SetLabel(suite + (spec.jobs == 1 ? " serial" : " parallel"));
}

}  // namespace

BENCHMARK(BM_CauchySum)->ArgsProduct({{8, 16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RosenblumSum)->ArgsProduct({{8, 16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialBatch)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
