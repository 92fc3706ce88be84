#include <benchmark/benchmark.h>

#include "pcoinv/characters.hpp"

namespace {

template <pcoinv::CharMethod M>
void BM_CharP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = pcoinv::char_P(n, M);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CharP<pcoinv::CharMethod::syt>)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharP<pcoinv::CharMethod::koszul>)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharP<pcoinv::CharMethod::trace>)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = pcoinv::character_table(n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 8, 2);

}  // namespace
