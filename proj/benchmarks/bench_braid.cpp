#include <benchmark/benchmark.h>

#include "gprop/braid.hpp"

using namespace gprop;

static void BM_GarsideNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(42);
  int strands = static_cast<int>(state.range(0));
  int length = static_cast<int>(state.range(1));
  std::vector<BraidWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_braid_word(rng, strands, length));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid_normal_form(words[i++ & 63]));
  }
}
BENCHMARK(BM_GarsideNormalForm)->Args({4, 12})->Args({5, 24})->Args({8, 48});

static void BM_BraidEqual(benchmark::State& state) {
  std::mt19937_64 rng(43);
  int strands = static_cast<int>(state.range(0));
  std::vector<int> letters;
  for (int i = 0; i < 16; ++i) {
    int g = 1 + static_cast<int>(rng() % (strands - 1));
    letters.push_back(rng() & 1 ? g : -g);
  }
  BraidWord w(strands, letters);
  BraidWord v = braid_concat(braid_concat(w, w.inverse()), w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid_equal(w, v));
  }
}
BENCHMARK(BM_BraidEqual)->Arg(4)->Arg(6);

static void BM_Cable(benchmark::State& state) {
  std::mt19937_64 rng(44);
  BraidWord w = random_braid_word(rng, 4, 12);
  std::vector<int> mult{2, 1, 3, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cable(w, mult));
  }
}
BENCHMARK(BM_Cable);

BENCHMARK_MAIN();
