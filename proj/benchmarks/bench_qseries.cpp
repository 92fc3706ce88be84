#include <benchmark/benchmark.h>

#include "pcoinv/qseries.hpp"

namespace {

void BM_MacMahon(benchmark::State& state) {
  const pcoinv::Composition alpha(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    auto r = pcoinv::macmahon_check(alpha, 8);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MacMahon)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_AAlpha(benchmark::State& state) {
  const pcoinv::Composition alpha(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    auto a = pcoinv::A_alpha(alpha);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AAlpha)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

}  // namespace
