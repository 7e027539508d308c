#include "ipr/dynamics/observable.hpp"
#include "ipr/recurrence/isometric_search.hpp"
#include "ipr/recurrence/recurrence.hpp"

#include <benchmark/benchmark.h>

using namespace ipr;

namespace {

Rational rat(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

}  // namespace

static void BM_CorrelationRotation(benchmark::State& state) {
  const auto sys = MeasureSystem::rotation({rat(3, 11)});
  const EventSet b = make_interval_event({{rat(0), rat(1, 3)}, {rat(1, 2), rat(5, 6)}});
  const Vector w(Scalar::from_rational(rat(7, 5)));
  for (auto _ : state) benchmark::DoNotOptimize(correlation(sys, b, w));
}
BENCHMARK(BM_CorrelationRotation);

static void BM_CorrelationBernoulli(benchmark::State& state) {
  const auto sys = MeasureSystem::bernoulli(2, {rat(1, 3), rat(2, 3)});
  const EventSet b = make_cylinder_event(
      {{Scalar::poly_from_index(2, 0), {0}}, {Scalar::poly_from_index(2, 3), {1}}, {Scalar::poly_from_index(2, 6), {0}}});
  const Vector w(Scalar::poly_from_index(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(correlation(sys, b, w));
}
BENCHMARK(BM_CorrelationBernoulli);

static void BM_RecurrenceSetRotation(benchmark::State& state) {
  const auto sys = MeasureSystem::rotation({rat(1, 7)});
  const EventSet b = make_interval_event({{rat(0), rat(1, 2)}});
  const auto phi = PolynomialMap::parse(GroundRing::rationals(), 1, 1, "x1^2");
  const auto w = WindowSpec::rationals(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_set(sys, b, phi, rat(1, 100), w));
}
BENCHMARK(BM_RecurrenceSetRotation)->Arg(4)->Arg(8);

static void BM_PipelineBernoulli(benchmark::State& state) {
  const auto sys = MeasureSystem::bernoulli(2, {rat(1, 2), rat(1, 2)});
  const EventSet b = make_cylinder_event({{Scalar::poly_from_index(2, 0), {0}}, {Scalar::poly_from_index(2, 2), {1}}});
  const auto phi = PolynomialMap::parse(GroundRing::poly_ring(2), 1, 1, "x1");
  const auto w = WindowSpec::polynomials(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_pipeline(sys, b, phi, rat(1, 100), w));
}
BENCHMARK(BM_PipelineBernoulli)->Arg(4)->Arg(6);

static void BM_IsometricSearch(benchmark::State& state) {
  const auto sys = MeasureSystem::rotation({rat(1, 7)});
  const auto x = indicator(sys, make_interval_event({{rat(0), rat(1, 2)}}));
  const MonomialMap m(Scalar::from_rational(rat(1)), {static_cast<unsigned>(state.range(0))});
  std::vector<Vector> gens;
  for (int g : {3, 5, 9, 2, 11, 4, 6}) gens.emplace_back(Scalar::from_rational(rat(g)));
  for (auto _ : state) benchmark::DoNotOptimize(isometric_recurrence_search(sys, x, m, rat(1, 100), gens));
}
BENCHMARK(BM_IsometricSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
