#include <random>

#include <benchmark/benchmark.h>

#include "fim/munn_tree.hpp"

namespace {

  using namespace fim;

  Word random_word(Alphabet const& alphabet, std::size_t length) {
    std::mt19937                       rng(length);
    std::uniform_int_distribution<int> gen(0, int(alphabet.size()) - 1);
    std::bernoulli_distribution        coin;
    Word                               w(length);
    for (auto& l : w) {
      l = Letter{static_cast<std::uint8_t>(gen(rng)), coin(rng)};
    }
    return w;
  }

  void build_munn_tree(benchmark::State& state) {
    Alphabet alphabet("abc");
    auto     w = random_word(alphabet, state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(munn_tree(alphabet, w));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(build_munn_tree)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

  void multiply(benchmark::State& state) {
    Alphabet alphabet("ab");
    auto     u = munn_tree(alphabet, random_word(alphabet, state.range(0)));
    auto     v = munn_tree(alphabet, random_word(alphabet, state.range(0) + 1));
    for (auto _ : state) {
      benchmark::DoNotOptimize(u * v);
    }
  }
  BENCHMARK(multiply)->RangeMultiplier(4)->Range(16, 1024);

  void word_problem(benchmark::State& state) {
    Alphabet alphabet("ab");
    auto     u = random_word(alphabet, state.range(0));
    auto     v = u;
    v.insert(v.end(), u.rbegin(), u.rend());
    for (auto _ : state) {
      benchmark::DoNotOptimize(fim_equal(alphabet, u, v));
    }
  }
  BENCHMARK(word_problem)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
