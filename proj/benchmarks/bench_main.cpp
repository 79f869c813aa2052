#include <benchmark/benchmark.h>

#include <cmath>

#include "gaplab/experiments.hpp"
#include "gaplab/expsum.hpp"
#include "gaplab/fourier.hpp"
#include "gaplab/intersective.hpp"

using namespace gaplab;

static void BM_WeylSum(benchmark::State& state) {
  const auto h = parse_poly("x^3-19");
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_sum(h, n, 7, 1'000'003));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_WeylSum)->Range(1 << 8, 1 << 16);

static void BM_Dft(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  ZdFunction f(d);
  for (std::uint64_t x = 0; x < d; ++x) f[x] = Complex(std::sin(static_cast<double>(x)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(dft(f));
}
// powers of two and a prime size (Bluestein path)
BENCHMARK(BM_Dft)->Arg(1 << 10)->Arg(1 << 16)->Arg(65'537);

static void BM_Certify(benchmark::State& state) {
  const auto h = parse_poly("x^5+x^4+x^3-19x^2-19x-19");
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify(h, InputMode::primes, bound));
}
BENCHMARK(BM_Certify)->Arg(100)->Arg(10'000);

static void BM_DetectionCount(benchmark::State& state) {
  SymmetricGap A;
  A.steps = {30, 77, static_cast<std::int64_t>(state.range(0))};
  A.widths = {12, 12, 40};
  const auto inst = make_detection_instance(A, parse_poly("x^2+x"), InputMode::integers);
  for (auto _ : state) benchmark::DoNotOptimize(detection_count(inst));
}
BENCHMARK(BM_DetectionCount)->Arg(1'001)->Arg(10'007)->Arg(100'003);

static void BM_VerifyLemma1Box(benchmark::State& state) {
  const auto side = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma1_box(side, static_cast<std::uint64_t>(side), -5, 5, 1));
  state.SetItemsProcessed(state.iterations() * side * side * 11 * 11 * 11);
}
BENCHMARK(BM_VerifyLemma1Box)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ExtremalSearch(benchmark::State& state) {
  SearchConfig cfg;
  cfg.Ns = {static_cast<std::uint64_t>(state.range(0))};
  cfg.dims = 2;
  cfg.strategy = SearchStrategy::hill_climb;
  cfg.seed = 1;
  cfg.budget = 2000;
  cfg.filters.require_proper = true;
  for (auto _ : state) benchmark::DoNotOptimize(extremal_search(cfg));
}
BENCHMARK(BM_ExtremalSearch)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
