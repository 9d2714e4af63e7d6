#include <bezout/eliminant.hpp>
#include <bezout/fibercount.hpp>
#include <bezout/oracle.hpp>
#include <bezout/puiseux.hpp>
#include <bezout/qlinalg.hpp>

#include <benchmark/benchmark.h>

namespace {

bezout::PolySystem sample(int n) {
  return bezout::oracle::generate({bezout::oracle::Family::random, n, n, 5, 11}).system;
}

void BM_filtration(benchmark::State& state) {
  const auto s = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bezout::fibercount::count_filtration(s).count);
}
BENCHMARK(BM_filtration)->DenseRange(1, 4);

void BM_eliminant(benchmark::State& state) {
  const auto s = sample(static_cast<int>(state.range(0)));
  const auto line = bezout::fibercount::choose_general_line(s);
  for (auto _ : state) benchmark::DoNotOptimize(bezout::eliminant::count_via_eliminant(s, line));
}
BENCHMARK(BM_eliminant)->DenseRange(1, 3);

void BM_line_pencil(benchmark::State& state) {
  const auto s = sample(static_cast<int>(state.range(0)));
  const auto line = bezout::fibercount::choose_general_line(s);
  for (auto _ : state) benchmark::DoNotOptimize(bezout::oracle::count_via_line_pencil(s, line));
}
BENCHMARK(BM_line_pencil)->DenseRange(1, 4);

void BM_zeuthen(benchmark::State& state) {
  const auto s = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bezout::puiseux::zeuthen_count(s));
}
BENCHMARK(BM_zeuthen)->DenseRange(1, 3);

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bezout::qlinalg::QMat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>((r * 7 + c * 3 + r * c) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(bezout::qlinalg::rref_rank_kernel_image(m).rank);
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
