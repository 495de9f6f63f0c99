#include <benchmark/benchmark.h>

#include "absorb/generators.hpp"
#include "absorb/green.hpp"
#include "absorb/ideals.hpp"
#include "absorb/setopt.hpp"
#include "absorb/suite.hpp"

using namespace absorb;

static void BM_EnumerateOrder3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_semigroups(3));
  }
}
BENCHMARK(BM_EnumerateOrder3);

static void BM_EnumerateOrder4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_semigroups(4));
  }
}
BENCHMARK(BM_EnumerateOrder4);

static void BM_GreenSummary(benchmark::State& state) {
  FiniteSemigroup s = random_transformation_semigroup(4, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_classes(s));
  }
  state.counters["n"] = static_cast<double>(s.size());
}
BENCHMARK(BM_GreenSummary);

static void BM_TheoremSuiteTransformation(benchmark::State& state) {
  FiniteSemigroup s = random_transformation_semigroup(4, 2, static_cast<std::uint64_t>(state.range(0)));
  SuiteOptions opts;
  opts.ideal_budget = 256;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem_suite(s, opts));
  }
  state.counters["n"] = static_cast<double>(s.size());
}
BENCHMARK(BM_TheoremSuiteTransformation)->Arg(1)->Arg(4)->Arg(7);

static void BM_IdealEnumeration(benchmark::State& state) {
  FiniteSemigroup s = random_transformation_semigroup(4, 2, 7);
  GreenSummary g = green_classes(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IdealFamily::of(s, g).count());
  }
}
BENCHMARK(BM_IdealEnumeration);

static void BM_SetoptDuality(benchmark::State& state) {
  using namespace absorb::setopt;
  SplitMix64 rng(3);
  Cone c = random_ambient_cone(rng);
  std::vector<ConlinearElem> instances;
  while (instances.size() < 16) {
    ConlinearElem a = random_poly(rng, c);
    if (a.kind() == ConlinearElem::Kind::Poly) instances.push_back(a);
  }
  for (auto _ : state) {
    for (const auto& a : instances) {
      benchmark::DoNotOptimize(duality_reconstruct(a, c));
    }
  }
}
BENCHMARK(BM_SetoptDuality);

BENCHMARK_MAIN();
