#include "ipr/hj/hj_number.hpp"
#include "ipr/hj/lines.hpp"
#include "ipr/ip/finite_sums.hpp"
#include "ipr/ip/fk_density.hpp"
#include "ipr/ip/fu_ramsey.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ipr;

static void BM_HjNumberExhaustive(benchmark::State& state) {
  const auto t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hj_number(2, t, t));
}
BENCHMARK(BM_HjNumberExhaustive)->Arg(2)->Arg(3);

static void BM_HjStepDfs(benchmark::State& state) {
  HjNumberOptions opts;
  opts.exhaustive_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hj_step(3, 2, static_cast<unsigned>(state.range(0)), opts));
}
BENCHMARK(BM_HjStepDfs)->Arg(2)->Arg(3);

static void BM_FindMonoLine(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  Coloring c(word_count(3, m));
  for (auto& x : c) x = static_cast<std::uint8_t>(rng() % 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_mono_line(3, m, c));
}
BENCHMARK(BM_FindMonoLine)->Arg(3)->Arg(5)->Arg(7);

static void BM_FuMinimalR(benchmark::State& state) {
  ColoringSearchRequest req;
  req.options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fu_ramsey_minimal_r(2, 2, 6, req));
}
BENCHMARK(BM_FuMinimalR)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ContainsIpR(benchmark::State& state) {
  std::vector<std::int64_t> odds;
  for (std::int64_t x = 1; x <= state.range(0); x += 2) odds.push_back(x);
  const ElementSet<std::int64_t> s(odds);
  for (auto _ : state) benchmark::DoNotOptimize(contains_ip_r(s, 2, s));
}
BENCHMARK(BM_ContainsIpR)->Arg(64)->Arg(256);

static void BM_FkDensity(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fk_density_experiment(2, n));
}
BENCHMARK(BM_FkDensity)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
