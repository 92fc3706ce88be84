#include <benchmark/benchmark.h>

#include "pcoinv/deform.hpp"

namespace {

void BM_SemisimpleFibre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = pcoinv::semisimple_fibre_check(n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SemisimpleFibre)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_HilbertR(benchmark::State& state) {
  const pcoinv::Composition alpha(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    auto h = pcoinv::hilbert_R(alpha);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HilbertR)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
