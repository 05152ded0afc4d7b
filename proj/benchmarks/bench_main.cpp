#include <benchmark/benchmark.h>

#include "levikohn/groebner.hpp"
#include "levikohn/kohn.hpp"
#include "levikohn/levi.hpp"
#include "levikohn/parser.hpp"
#include "levikohn/variety.hpp"

using namespace levikohn;

namespace {

const char* const kExample =
    "r = -x3 - z1*conj(z1)*z2*conj(z2) + (1/4)*(z1*conj(z1))^2 + (3/4)*(z2*conj(z2))^2";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_defining_function(kExample));
}
BENCHMARK(BM_Parse);

// Gröbner basis of the Levi minors of the example, the ideal the chain sees at step 1.
void BM_GroebnerExampleMinors(benchmark::State& state) {
  const DefiningFunction d(parse_defining_function(kExample));
  const auto s = init_chain(d, 2);
  const auto gens = s.generator_polys();
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, 3));
}
BENCHMARK(BM_GroebnerExampleMinors)->Unit(benchmark::kMicrosecond);

void BM_ChainBall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::string text = "-1";
  for (std::size_t j = 1; j <= n; ++j) text += " + z" + std::to_string(j) + "*conj(z" + std::to_string(j) + ")";
  const DefiningFunction d(parse_defining_function(text, n));
  for (auto _ : state) benchmark::DoNotOptimize(run_chain(d, 1, 4));
}
BENCHMARK(BM_ChainBall)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_ChainExample(benchmark::State& state) {
  const DefiningFunction d(parse_defining_function(kExample));
  const auto q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_chain(d, q, 4));
}
BENCHMARK(BM_ChainExample)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ChainWeaklyPseudoconvex(benchmark::State& state) {
  const DefiningFunction d(parse_defining_function("z1*conj(z1) + (z2*conj(z2))^2 - 1"));
  for (auto _ : state) benchmark::DoNotOptimize(run_chain(d, 1, 4));
}
BENCHMARK(BM_ChainWeaklyPseudoconvex)->Unit(benchmark::kMicrosecond);

void BM_ClassifySamples(benchmark::State& state) {
  const DefiningFunction d(parse_defining_function(kExample));
  const auto graph = HermitianMetric::graph(3, 2);
  const auto pts = sample_boundary(d, Box(6, {-0.6, 0.6}), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state)
    for (const auto& p : pts.points) benchmark::DoNotOptimize(classify_point(d, p, 2, graph));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.points.size()));
}
BENCHMARK(BM_ClassifySamples)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_HolDimHalfSpace(benchmark::State& state) {
  const DefiningFunction d(parse_defining_function("2*x2", 2));
  const auto v = VarietyIdeal::from(2, {parse_expression("x2", 2)});
  const Point origin(2, {0.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(holomorphic_dimension(d, v, origin));
}
BENCHMARK(BM_HolDimHalfSpace)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
