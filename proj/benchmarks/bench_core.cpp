#include <benchmark/benchmark.h>

#include "clusterkit/automorphism.hpp"
#include "clusterkit/polygon.hpp"

using namespace clusterkit;

namespace {

Seed typeASeed(int k) {
    ExtendedMatrix B(k, k);
    for (int i = 0; i + 1 < k; ++i) {
        B.at(i, i + 1) = 1;
        B.at(i + 1, i) = -1;
    }
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
    return makeInitialSeed(names, B, k);
}

void BM_MutationRoundTrip(benchmark::State& state) {
    const Seed s = typeASeed(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Seed t = mutateSeed(s, 0);
        t = mutateSeed(t, 1);
        t = mutateSeed(t, 0);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_MutationRoundTrip)->Arg(3)->Arg(5);

void BM_Enumerate(benchmark::State& state) {
    const Seed s = typeASeed(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ExchangeGraph g = ExchangeGraph::enumerate(s, 20000);
        benchmark::DoNotOptimize(g.nodeCount());
    }
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateAut(benchmark::State& state) {
    PolygonUniverse poly(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        AutGroup G = AutGroup::enumerateAut(poly.graph());
        benchmark::DoNotOptimize(G.order());
    }
}
BENCHMARK(BM_EnumerateAut)->Arg(6)->Arg(7)->Arg(8);

void BM_OctagonFixedAnalysis(benchmark::State& state) {
    PolygonUniverse poly(8);
    AutGroup G = AutGroup::enumerateAut(poly.graph());
    const int s1 = *G.idOf(poly.psiFromMcg(DihedralElement::refl(8, 0), G));
    for (auto _ : state) {
        GaloisEngine engine(poly.graph(), G);
        FixedAnalysis fa = engine.fixedAnalysis(closure(G, {s1}));
        benchmark::DoNotOptimize(fa.msub.size());
    }
}
BENCHMARK(BM_OctagonFixedAnalysis);

} // namespace

BENCHMARK_MAIN();
