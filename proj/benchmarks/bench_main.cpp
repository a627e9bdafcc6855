#include <benchmark/benchmark.h>

#include <surfgraph/canonical.hpp>
#include <surfgraph/counting.hpp>
#include <surfgraph/generator.hpp>
#include <surfgraph/orientation.hpp>
#include <surfgraph/ribbon_graph.hpp>
#include <surfgraph/verify.hpp>

namespace {

using namespace surfgraph;

// Two vertices, six edges (two loops), four faces.
RibbonGraph kite() {
  return RibbonGraph::build({{0, 6, 2, 8, 1, 10, 3, 4}, {11, 5, 7, 9}},
                            {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}});
}

void BM_CountClass(benchmark::State& state) {
  const auto g = kite();
  const auto c = static_cast<OrientationClass>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_class(g, c));
  state.SetLabel(std::string(to_string(c)));
}
BENCHMARK(BM_CountClass)->DenseRange(0, 3);

void BM_LocalTensions(benchmark::State& state) {
  const auto g = kite();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_local_tensions(g, k));
}
BENCHMARK(BM_LocalTensions)->Arg(3)->Arg(5)->Arg(7);

void BM_Polynomial(benchmark::State& state) {
  const auto g = kite();
  for (auto _ : state) benchmark::DoNotOptimize(poly_local_tension(g));
}
BENCHMARK(BM_Polynomial)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
  const auto g = kite();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode);

void BM_Generate(benchmark::State& state) {
  CorpusSpec spec;
  spec.edges = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(spec, 1));
}
BENCHMARK(BM_Generate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyGraph(benchmark::State& state) {
  const auto g = kite();
  VerifyOptions options;
  options.kmax = 2;
  for (auto _ : state) benchmark::DoNotOptimize(verify_graph(g, options));
}
BENCHMARK(BM_VerifyGraph)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
