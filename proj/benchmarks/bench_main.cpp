#include <benchmark/benchmark.h>

#include "peaklab/group_algebra.hpp"
#include "peaklab/partitions.hpp"
#include "peaklab/span.hpp"
#include "peaklab/verify.hpp"

using namespace peaklab;

static void BM_GroupAlgebraMultiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<GAElem> e = idempotents(n, StructureFamily::phi);
    for (auto _ : state) {
        GAElem p = e[1] * e.back();
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_GroupAlgebraMultiply)->DenseRange(3, 5);

static void BM_PairTensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ClassPolynomial& cp = class_polynomial(n, StructureFamily::rho);
    const Group& G = Group::get(GroupKind::symmetric, n);
    for (auto _ : state) {
        PairTensor t = pair_tensor(G, cp.class_of, cp.labels.size(), cp.class_of, cp.labels.size());
        benchmark::DoNotOptimize(t.counts.data());
    }
}
BENCHMARK(BM_PairTensor)->DenseRange(4, 6);

static void BM_ProductIdentity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        VerifyResult r = verify_identity(n, "ges");
        benchmark::DoNotOptimize(r.ok);
    }
}
BENCHMARK(BM_ProductIdentity)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EnrichedPartitions(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Poset P = Poset::chain(Permutation({2, 1, 4, 3, 5}));
    for (auto _ : state) benchmark::DoNotOptimize(count_partitions(P, {AlphabetKind::enriched, k}));
}
BENCHMARK(BM_EnrichedPartitions)->DenseRange(1, 4);

static void BM_ChainDP(benchmark::State& state) {
    const SignedPermutation pi({-3, 1, -2, 5, 4});
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_chain_partitions(pi, {AlphabetKind::B_enriched, k}));
}
BENCHMARK(BM_ChainDP)->RangeMultiplier(4)->Range(1, 64);
BENCHMARK_MAIN();
