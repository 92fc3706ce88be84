#include <benchmark/benchmark.h>

#include "pcoinv/quotient.hpp"

namespace {

pcoinv::Composition ones(int n) { return pcoinv::Composition(static_cast<std::size_t>(n), 1); }

void BM_HilbertP(benchmark::State& state) {
  const auto alpha = ones(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto h = pcoinv::hilbert_P(alpha);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HilbertP)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HilbertPComposition(benchmark::State& state) {
  const pcoinv::Composition alpha{2, 2, 1};
  for (auto _ : state) {
    auto h = pcoinv::hilbert_P(alpha);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HilbertPComposition)->Unit(benchmark::kMillisecond);

void BM_InvariantHilbert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    pcoinv::ClassTraceTable table(n);
    auto h = pcoinv::invariant_hilbert(table, pcoinv::Composition{n - 1, 1});
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_InvariantHilbert)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
