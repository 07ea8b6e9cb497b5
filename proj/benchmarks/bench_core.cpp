#include <benchmark/benchmark.h>

#include "qdiv/ensembles.hpp"
#include "qdiv/suites.hpp"

using namespace qdiv;

namespace {

void BM_HermitianEig(benchmark::State& state) {
  const HermitianMatrix h(random_state(state.range(0), state.range(0), 1).matrix());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->DenseRange(2, 8, 2);

void BM_RelativeEntropy(benchmark::State& state) {
  const ProblemInstance inst = random_pd_instance(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(relative_entropy(inst.a, inst.b));
}
BENCHMARK(BM_RelativeEntropy)->DenseRange(2, 8, 2);

void BM_SandwichedF(benchmark::State& state) {
  const ProblemInstance inst = random_pd_instance(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(sandwiched_f(inst.a, inst.b, 0.8));
}
BENCHMARK(BM_SandwichedF)->DenseRange(2, 8, 2);

void BM_DeltaTildeBuiltinExample(benchmark::State& state) {
  const ProblemInstance inst = paper_example();
  for (auto _ : state) benchmark::DoNotOptimize(delta_tilde(inst.a, inst.b, *inst.channel, 0.9));
}
BENCHMARK(BM_DeltaTildeBuiltinExample);

// Whole-suite throughput, one worker, 20 trials.
void BM_Suite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.trials = 20;
  cfg.workers = 1;
  const Suite s = all_suites()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(to_string(s)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(s, cfg));
}
BENCHMARK(BM_Suite)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
