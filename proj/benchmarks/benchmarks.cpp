// Microbenchmarks for the hot paths of the sweep: canonicalization,
// enumeration, spectral decomposition, and whole-record analysis.

#include <benchmark/benchmark.h>

#include <centrascope/centrascope.hpp>

namespace {

using namespace centrascope;

const Graph& sample_graph8() {
    // A representative mid-density 8-node graph (the 3-cube plus a chord).
    static const Graph g = Graph::from_edge_list(
        8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
            {0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 6}});
    return g;
}

void BM_CanonicalForm(benchmark::State& state) {
    const Graph& g = sample_graph8();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_graph6(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_EnumerateConnected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(n));
    state.SetItemsProcessed(state.iterations() * enumerate_connected(n).size());
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Arg(7);

void BM_SpectralDecomposition(benchmark::State& state) {
    const Graph& g = sample_graph8();
    for (auto _ : state) benchmark::DoNotOptimize(spectral_decomposition(g));
}
BENCHMARK(BM_SpectralDecomposition);

void BM_BetweennessExact(benchmark::State& state) {
    const Graph& g = sample_graph8();
    for (auto _ : state) benchmark::DoNotOptimize(betweenness_values(g));
}
BENCHMARK(BM_BetweennessExact);

void BM_AutomorphismOrbits(benchmark::State& state) {
    const Graph& g = sample_graph8();
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_orbits(g));
}
BENCHMARK(BM_AutomorphismOrbits);

void BM_SubgraphSeries(benchmark::State& state) {
    const Graph& g = sample_graph8();
    for (auto _ : state) benchmark::DoNotOptimize(subgraph_centrality_series(g, 30));
}
BENCHMARK(BM_SubgraphSeries);

void BM_DiscriminanceRecord(benchmark::State& state) {
    const Graph& g = sample_graph8();
    for (auto _ : state) benchmark::DoNotOptimize(discriminance_record(g));
}
BENCHMARK(BM_DiscriminanceRecord);

}  // namespace
