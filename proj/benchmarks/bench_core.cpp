#include <benchmark/benchmark.h>

#include "johnson/combinatorics.hpp"
#include "johnson/reconstruction.hpp"

using namespace johnson;

static void BM_Eberlein(benchmark::State& state) {
    for (auto _ : state) {
        Int v = eberlein(3, 2, 6, 14);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Eberlein);

static void BM_RankUnrankRoundTrip(benchmark::State& state) {
    const JohnsonParams p(12, 6);
    std::uint64_t idx = 0;
    for (auto _ : state) {
        const Vertex v = unrank(p, idx);
        benchmark::DoNotOptimize(rank(v));
        idx = (idx + 1) % 924;
    }
}
BENCHMARK(BM_RankUnrankRoundTrip);

static void BM_SphereEnumeration(benchmark::State& state) {
    const JohnsonParams p(12, 6);
    const Vertex c = canonical_center(p);
    for (auto _ : state) {
        auto s = sphere(SphereSpec{c, 2});
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(BM_SphereEnumeration);

static void BM_EigenspaceBasis(benchmark::State& state) {
    const JohnsonParams p(8, 3);
    for (auto _ : state) {
        auto basis = eigenspace_basis(p, 1);
        benchmark::DoNotOptimize(basis.basis.size());
    }
}
BENCHMARK(BM_EigenspaceBasis)->Unit(benchmark::kMillisecond);

static void BM_CriterionReport(benchmark::State& state) {
    const JohnsonParams p(12, 4);
    for (auto _ : state) {
        auto rep = criterion(2, 2, p);
        benchmark::DoNotOptimize(rep.verdict);
    }
}
BENCHMARK(BM_CriterionReport);

static void BM_OracleSphere(benchmark::State& state) {
    const JohnsonParams p(9, 3);
    const EigenspaceBasis basis = eigenspace_basis(p, 1);
    const Vertex c = canonical_center(p);
    for (auto _ : state) {
        auto v = oracle_sphere(basis, 2, c);
        benchmark::DoNotOptimize(v.unique);
    }
}
BENCHMARK(BM_OracleSphere)->Unit(benchmark::kMillisecond);

static void BM_CounterexampleConstruction(benchmark::State& state) {
    const JohnsonParams p(12, 4);
    for (auto _ : state) {
        auto g = counterexample_sphere(2, 1, p);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_CounterexampleConstruction)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
