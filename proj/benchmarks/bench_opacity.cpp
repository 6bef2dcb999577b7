#include <benchmark/benchmark.h>

#include "opacity/analysis.hpp"
#include "opacity/corpus.hpp"
#include "opacity/minimization.hpp"
#include "opacity/oracle.hpp"
#include "random_automata.hpp"

namespace {

using namespace opacity;
namespace tst = opacity::testing;

std::vector<Dfao> instances(std::size_t n, Digit k, std::size_t count) {
  tst::Rng rng(n * 1000 + k);
  std::vector<Dfao> out;
  while (out.size() < count) out.push_back(tst::random_dfao(rng, n, k, 2));
  return out;
}

void BM_ComputeOpacity(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 2, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_opacity(pool[i++ % pool.size()].automaton()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeOpacity)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_Minimize(benchmark::State& state) {
  const auto pool = instances(static_cast<std::size_t>(state.range(0)), 2, 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(pool[i++ % pool.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_AnalyzeCorpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : corpus::entries()) benchmark::DoNotOptimize(analyze_sequence(e.build()));
  }
}
BENCHMARK(BM_AnalyzeCorpus);

void BM_BruteForceOpacity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tst::Rng rng(n);
  const Automaton a = tst::random_dfao(rng, n, 2, 1).automaton();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_opacity(a, oracle::oracle_bound(a)));
  }
}
BENCHMARK(BM_BruteForceOpacity)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
