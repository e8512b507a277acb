#include "ghom/canonical.hpp"
#include "ghom/enumerate.hpp"
#include "ghom/exact_rank.hpp"
#include "ghom/graph_complex.hpp"
#include "ghom/sym_delta.hpp"

#include <benchmark/benchmark.h>

using namespace ghom;

namespace {

static void BM_CanonicalForm(benchmark::State& state) {
    StableGraph g = wheel(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze_graph(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(7)->Arg(9);

static void BM_EnumerateTrivalentMatching(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trivalent_matching(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateTrivalentMatching)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrivalentAugmentation(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    MultigraphClass cls{2 * g - 2, 3 * g - 3, 3, 3, true};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_multigraphs(cls));
}
BENCHMARK(BM_EnumerateTrivalentAugmentation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_JgClosure(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_jg(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_JgClosure)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BuildGraphComplex(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_graph_complex(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildGraphComplex)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RankExactTopBoundary(benchmark::State& state) {
    GraphComplex gc = build_graph_complex(static_cast<int>(state.range(0)));
    const SparseIntMatrix& top = gc.complex.boundaries.back();
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(top));
}
BENCHMARK(BM_RankExactTopBoundary)->Arg(5)->Unit(benchmark::kMicrosecond);

static void BM_RankExactSubdivisionDelta3(benchmark::State& state) {
    GradedChainComplex c = simplicial_chain_complex(barycentric_subdivision(delta_g(3)));
    // Largest boundary matrix of the subdivision.
    const SparseIntMatrix* biggest = &c.boundaries[0];
    for (const SparseIntMatrix& b : c.boundaries)
        if (b.nnz() > biggest->nnz()) biggest = &b;
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(*biggest));
}
BENCHMARK(BM_RankExactSubdivisionDelta3)->Unit(benchmark::kMillisecond);

static void BM_CellularChainDelta(benchmark::State& state) {
    SymmetricDeltaComplex d = delta_g(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cellular_chain_complex(d));
}
BENCHMARK(BM_CellularChainDelta)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
