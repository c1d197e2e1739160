#include <benchmark/benchmark.h>

#include <random>

#include "coct/dp.hpp"
#include "coct/lattice.hpp"

using namespace coct;

namespace {

DPTable random_table(int k, int bmax, int wmax, std::uint64_t seed) {
  DPTable t(k, bmax, wmax);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < t.num_states(); ++s) {
    for (int b = 0; b <= bmax; ++b) {
      for (int w = 0; w <= wmax; ++w) {
        if (rng() & 1) t.flip(s, b, w);
      }
    }
  }
  return t;
}

void BM_transform_rows(benchmark::State& state, Exec exec) {
  const int k = static_cast<int>(state.range(0));
  auto t = random_table(k, 3, 127, 1);
  for (auto _ : state) {
    zeta_rows(t.data(), k, t.row_words(), exec);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.num_states()));
}

void BM_table_union(benchmark::State& state, Exec exec) {
  const int k = static_cast<int>(state.range(0));
  const auto a = random_table(k, 3, 127, 2);
  const auto b = random_table(k, 3, 127, 3);
  for (auto _ : state) {
    state.PauseTiming();
    auto left = a;
    auto right = b;
    state.ResumeTiming();
    auto out = table_union(std::move(left), std::move(right), 6, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.num_states()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_transform_rows, serial, Exec::serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_transform_rows, parallel, Exec::parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_table_union, serial, Exec::serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_table_union, parallel, Exec::parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
