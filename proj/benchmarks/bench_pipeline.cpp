#include <benchmark/benchmark.h>

#include <random>

#include "overbid/overbid.hpp"

using namespace overbid;

namespace {

// n consumers and n suppliers over n DPs with seeded random parameters.
Scenario market(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> cap(50, 300), cost(0.5, 8), level(5, 12), value(25, 40);
  Scenario sc;
  sc.name = "bench";
  for (std::size_t t = 0; t < n; ++t) sc.dp_names.push_back("DP" + std::to_string(t + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Consumer c{"C" + std::to_string(i + 1), cap(rng), value(rng), {}, {}};
    for (std::size_t t = 0; t < n; ++t) {
      c.qbar.push_back(cap(rng));
      c.ct.push_back(cost(rng));
    }
    sc.consumers.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Supplier s{"S" + std::to_string(j + 1), cap(rng), level(rng), {}, {}};
    for (std::size_t t = 0; t < n; ++t) {
      s.qbar.push_back(cap(rng));
      s.ct.push_back(cost(rng));
    }
    sc.suppliers.push_back(std::move(s));
  }
  return sc;
}

void BM_EvaluateProfile(benchmark::State& state) {
  const Scenario sc = market(static_cast<std::size_t>(state.range(0)));
  const auto profile = StrategyProfile::uniform(sc.num_consumers(), sc.num_suppliers(), Strategy::O);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_profile(sc, profile));
}
BENCHMARK(BM_EvaluateProfile)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SweepScenarioTwo(benchmark::State& state) {
  const Scenario sc = fixtures::scenario_two();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(sc));
}
BENCHMARK(BM_SweepScenarioTwo);

void BM_Sweep(benchmark::State& state) {
  const Scenario sc = market(static_cast<std::size_t>(state.range(0)));
  const SweepOptions options{{}, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(sc, options));
}
BENCHMARK(BM_Sweep)->Args({4, 1})->Args({4, 0})->Args({5, 1})->Args({5, 0})->Unit(benchmark::kMillisecond);

void BM_DeferredAcceptance(benchmark::State& state) {
  const Scenario sc = market(static_cast<std::size_t>(state.range(0)));
  const auto ev =
      evaluate_in_detail(sc, StrategyProfile::uniform(sc.num_consumers(), sc.num_suppliers(), Strategy::O));
  for (auto _ : state) benchmark::DoNotOptimize(deferred_acceptance(ev.matches, sc, Side::consumer));
}
BENCHMARK(BM_DeferredAcceptance)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
