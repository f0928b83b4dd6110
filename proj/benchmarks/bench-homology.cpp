#include <benchmark/benchmark.h>

#include "fim/homology.hpp"

namespace {

  using namespace fim;
  using homology::HomologyVector;

  void basis_cycle(benchmark::State& state) {
    auto e = homology::transition_edge(0, state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology::basis_cycle(e));
    }
  }
  BENCHMARK(basis_cycle)->Arg(4)->Arg(16)->Arg(64);

  void act_on_transition(benchmark::State& state) {
    int  k = state.range(0);
    auto b = HomologyVector::unit(homology::transition_edge(k / 2, k));
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology::act(mono::Gen::y, b));
    }
  }
  BENCHMARK(act_on_transition)->Arg(4)->Arg(16)->Arg(64);

  void act_word(benchmark::State& state) {
    auto b = HomologyVector::unit(homology::transition_edge(2, 6));
    auto w = mono::parse_word("x^3 y^4 x y^2");
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology::act_word(w, b));
    }
  }
  BENCHMARK(act_word);

  void verify_filtration(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology::verify_filtration(state.range(0)));
    }
  }
  BENCHMARK(verify_filtration)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

  void rank_check(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology::rank_check(state.range(0)));
    }
  }
  BENCHMARK(rank_check)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
