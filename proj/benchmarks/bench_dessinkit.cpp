#include <benchmark/benchmark.h>

#include <string>

#include "dessinkit/belyi.hpp"
#include "dessinkit/dessin.hpp"
#include "dessinkit/dessin_io.hpp"
#include "dessinkit/enumeration.hpp"
#include "dessinkit/group.hpp"
#include "dessinkit/poly_parse.hpp"

using namespace dessinkit;

namespace {

Dessin load(const std::string& name) {
  return read_dessin_file(std::string(DESSINKIT_BENCH_CORPUS) + "/" + name + ".dsn").dessin;
}

void BM_ClosureD0(benchmark::State& state) {
  const Dessin d = load("d0");
  for (auto _ : state) benchmark::DoNotOptimize(closure(d).order());
}
BENCHMARK(BM_ClosureD0)->Unit(benchmark::kMillisecond);

void BM_RegularCoverD0(benchmark::State& state) {
  const Dessin d = load("d0");
  for (auto _ : state) benchmark::DoNotOptimize(regular_cover(d).degree());
}
BENCHMARK(BM_RegularCoverD0)->Unit(benchmark::kMillisecond);

void BM_CanonicalFormRabbit(benchmark::State& state) {
  const Dessin d = load("rabbit24");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalFormRabbit);

void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dessins({n, std::nullopt, false}).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_CriticalValues(benchmark::State& state) {
  const RatPoly f = parse_rat_poly("x^6 - 3x^5 + 2x^3 - x + 5");
  for (auto _ : state) benchmark::DoNotOptimize(critical_values(f).rational_values.size());
}
BENCHMARK(BM_CriticalValues)->Unit(benchmark::kMicrosecond);

void BM_BelyiReduce(benchmark::State& state) {
  const RatPoly f = parse_rat_poly("x^3 + x + 1");
  for (auto _ : state) benchmark::DoNotOptimize(belyi_reduce(f).map.factors.size());
}
BENCHMARK(BM_BelyiReduce)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
