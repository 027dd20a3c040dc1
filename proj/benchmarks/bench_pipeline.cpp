#include <benchmark/benchmark.h>

#include "linq/benchgen.hpp"
#include "linq/frontend.hpp"
#include "linq/noise.hpp"
#include "linq/pipeline.hpp"
#include "linq/router.hpp"
#include "linq/scheduler.hpp"

namespace {

linq::Circuit qft_circuit(int n) {
  linq::BenchmarkSpec spec;
  spec.family = linq::BenchFamily::QFT;
  spec.qubit_count = n;
  return linq::decompose(linq::parse(linq::generate(spec)));
}

linq::RouterConfig cfg(int n, int l) {
  linq::RouterConfig c;
  c.tape_ions = n;
  c.head_size = l;
  c.max_swap_len = linq::RouterConfig::default_max_swap_len(l);
  return c;
}

void BM_parse_decompose(benchmark::State& state) {
  linq::BenchmarkSpec spec;
  spec.family = linq::BenchFamily::QFT;
  spec.qubit_count = static_cast<int>(state.range(0));
  std::string text = linq::generate(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linq::decompose(linq::parse(text)));
  }
}
BENCHMARK(BM_parse_decompose)->Arg(16)->Arg(32);

void BM_route(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  linq::Circuit c = qft_circuit(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linq::route(c, cfg(n, n / 4)));
  }
}
BENCHMARK(BM_route)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_schedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  linq::Circuit c = qft_circuit(n);
  linq::RoutedCircuit r = linq::route(c, cfg(n, n / 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linq::schedule(r, n, n / 4));
  }
}
BENCHMARK(BM_schedule)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_evaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  linq::Circuit c = qft_circuit(n);
  linq::RoutedCircuit r = linq::route(c, cfg(n, n / 4));
  linq::Schedule s = linq::schedule(r, n, n / 4);
  linq::NoiseParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(linq::evaluate(s, r, p));
  }
}
BENCHMARK(BM_evaluate)->Arg(16)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
