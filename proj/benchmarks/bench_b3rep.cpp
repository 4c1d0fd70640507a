#include <benchmark/benchmark.h>

#include <random>

#include "b3rep/ext/oracle.hpp"
#include "b3rep/geom/analyzer.hpp"
#include "b3rep/geom/random_spec.hpp"
#include "b3rep/geom/tangent.hpp"
#include "b3rep/quiver/lattice.hpp"
#include "b3rep/rep/factory.hpp"

using namespace b3rep;

namespace {

// Largest simple dimension vector of total n, lexicographically.
quiver::GammaDimVector some_simple(int n) { return quiver::enumerate_simple_gamma(n).back(); }

}  // namespace

static void BM_ExtSelfGamma(benchmark::State& state) {
  const auto v = rep::random_simple_gamma(some_simple(static_cast<int>(state.range(0))), 1).rep;
  for (auto _ : state) benchmark::DoNotOptimize(ext::ext_dim_numeric(v, v, rep::RelationKind::Gamma));
}
BENCHMARK(BM_ExtSelfGamma)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_ExtB3(benchmark::State& state) {
  const auto v = rep::random_simple_gamma(some_simple(static_cast<int>(state.range(0))), 1).rep;
  const auto w = rep::scale_rep(v, rep::ExactScalar::root_of_unity6(2));
  for (auto _ : state) benchmark::DoNotOptimize(ext::ext_dim_numeric(v, w, rep::RelationKind::B3));
}
BENCHMARK(BM_ExtB3)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_TangentNumeric(benchmark::State& state) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  const auto spec = geom::random_spec(static_cast<int>(state.range(0)), rng);
  const auto v = rep::assemble(spec, 0);
  for (auto _ : state) benchmark::DoNotOptimize(geom::tangent_dim_numeric(v));
  state.counters["n"] = spec.n();
}
BENCHMARK(BM_TangentNumeric)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Burnside(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto v = rep::random_gamma_point(some_simple(static_cast<int>(state.range(0))), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rep::burnside_check(v));
}
BENCHMARK(BM_Burnside)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_Analyze(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const auto spec = geom::random_spec(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(geom::analyze(spec));
}
BENCHMARK(BM_Analyze)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateSignatures(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(geom::enumerate_signatures(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateSignatures)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
