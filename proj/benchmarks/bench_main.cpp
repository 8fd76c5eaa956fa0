#include <benchmark/benchmark.h>

#include "yh/random.hpp"
#include "yh/trace.hpp"

namespace {

using namespace yh;

void BM_Multiply(benchmark::State& state) {
  const YParams P = YParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(1);
  const YElement x = random_element(rng, P, 4), y = random_element(rng, P, 4);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Args({2, 3})->Args({3, 3})->Args({2, 4})->Args({4, 4});

void BM_LongestElementSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const YParams P = YParams::make(static_cast<int>(state.range(0)), n);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  const YElement w = y_perm(P, Perm::from_images(images));
  for (auto _ : state) benchmark::DoNotOptimize(w * w);
}
BENCHMARK(BM_LongestElementSquare)->Args({1, 4})->Args({2, 4})->Args({2, 5});

void BM_MarkovTrace(benchmark::State& state) {
  const YParams P = YParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(2);
  const YElement x = random_element(rng, P, 8) * random_element(rng, P, 8);
  for (auto _ : state) benchmark::DoNotOptimize(markov_trace(x));
}
BENCHMARK(BM_MarkovTrace)->Args({2, 3})->Args({3, 4})->Args({9, 4});

void BM_PadicTrace(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  Rng rng(3);
  const FramedBraidWord w = random_word(rng, 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(padic_trace(tower_from_word(w, 2, depth)));
}
BENCHMARK(BM_PadicTrace)->Arg(2)->Arg(3)->Arg(4);

void BM_Split(benchmark::State& state) {
  Rng rng(4);
  const FramedBraidWord w = random_word(rng, 6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(split(w));
}
BENCHMARK(BM_Split)->Arg(16)->Arg(256);

}  // namespace
BENCHMARK_MAIN();
