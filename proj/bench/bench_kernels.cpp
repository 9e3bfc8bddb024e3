// Serial reference against the OpenMP kernel for the heavier loops.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "xhermite/connection.hpp"
#include "xhermite/kernels.hpp"
#include "xhermite/propagator.hpp"

using namespace xhermite;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_propagator_grid(benchmark::State& state) {
  const PropagatorModel m({2, 3, 5, 6});
  std::vector<GridPoint> pts;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 50; ++j) pts.push_back({-2.0 + 0.02 * i, 0.3, {0.1 + 0.05 * j, -0.2}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(propagator_grid(m, pts, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
  label(state);
}

void BM_potential_grid(benchmark::State& state) {
  const PotentialModel v = potential({1, 2, 7, 8});
  std::vector<double> xs(100001);
  for (size_t i = 0; i < xs.size(); ++i) xs[i] = -10.0 + 2e-4 * static_cast<double>(i);
  for (auto _ : state) benchmark::DoNotOptimize(potential_grid(v, xs, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
  label(state);
}

void BM_connection_lemma(benchmark::State& state) {
  const QTable q = build_qtable({2, 3, 5, 6});
  for (auto _ : state) benchmark::DoNotOptimize(verify_connection_lemma(q, 12, mode(state)));
  label(state);
}

void BM_eigenfunctions(benchmark::State& state) {
  EigenCheckConfig cfg;
  cfg.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_eigenfunctions({1, 2}, 6, cfg));
  label(state);
}

}  // namespace

BENCHMARK(BM_propagator_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_potential_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_connection_lemma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eigenfunctions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
