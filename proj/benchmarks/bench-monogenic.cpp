#include <random>

#include <benchmark/benchmark.h>

#include "fim/cayley.hpp"
#include "fim/monogenic.hpp"

namespace {

  using namespace fim;

  mono::MonoWord random_word(std::size_t length) {
    std::mt19937                rng(length);
    std::bernoulli_distribution coin;
    mono::MonoWord              w(length);
    for (auto& g : w) {
      g = coin(rng) ? mono::Gen::x : mono::Gen::y;
    }
    return w;
  }

  void eval_word(benchmark::State& state) {
    auto w = random_word(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(mono::eval_word(w));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(eval_word)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

  void normal_form_round_trip(benchmark::State& state) {
    auto ball = mono::enumerate_ball(state.range(0));
    for (auto _ : state) {
      for (auto const& m : ball) {
        benchmark::DoNotOptimize(mono::to_interval(mono::normal_form(m)));
      }
    }
    state.SetItemsProcessed(state.iterations() * ball.size());
  }
  BENCHMARK(normal_form_round_trip)->Arg(8)->Arg(32);

  void enumerate_ball(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(mono::enumerate_ball(state.range(0)));
    }
  }
  BENCHMARK(enumerate_ball)->Arg(8)->Arg(32)->Arg(64);

  void ball_edges(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(cayley::ball_edges(state.range(0)));
    }
  }
  BENCHMARK(ball_edges)->Arg(8)->Arg(32);

  void verify_identities(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(mono::verify_identities(state.range(0)));
    }
  }
  BENCHMARK(verify_identities)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
