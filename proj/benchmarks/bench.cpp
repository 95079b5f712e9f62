// Micro-benchmarks for the enumeration and sampling cores. The map stream
// and the restriction sampler dominate every long-running command, so
// regressions here are the ones that matter.

#include <benchmark/benchmark.h>

#include <symchar/characters.hpp>
#include <symchar/cumulants.hpp>
#include <symchar/maps.hpp>
#include <symchar/restrict.hpp>
#include <symchar/transport.hpp>

using namespace symchar;

namespace {

void BM_EnumerateMaps(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long genus_sum = 0;
        for_each_map(k, [&](const BipartiteMap& m) { genus_sum += m.genus; });
        benchmark::DoNotOptimize(genus_sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(factorial(k).get_ui()));
}
BENCHMARK(BM_EnumerateMaps)->Arg(5)->Arg(6)->Arg(7);

void BM_StanleyCharacter(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Partition lambda({5, 3, 2, 1});
    for (auto _ : state) {
        Rational value = stanley_character(lambda, k);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_StanleyCharacter)->Arg(4)->Arg(5)->Arg(6);

void BM_EmbeddingCount(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const Partition target = dilate(Partition::staircase(5), s);
    const auto map = BipartiteMap::from_sigma_white(Permutation::parse_cycles("(1,2)(3,4,5)", 5));
    for (auto _ : state) {
        BigInt count = embedding_count(map, target);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EmbeddingCount)->Arg(2)->Arg(8);

void BM_MnCharacter(benchmark::State& state) {
    const Partition lambda({6, 4, 2});
    const Partition mu({3, 3, 2, 2, 1, 1});
    for (auto _ : state) {
        BigInt chi = mn_character(lambda, mu);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_MnCharacter);

void BM_FreeCumulants(benchmark::State& state) {
    const Partition lambda = dilate(Partition({3, 1}), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        FreeCumulantSequence r = free_cumulants(lambda, 6);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FreeCumulants)->Arg(4)->Arg(16);

void BM_CountDecoratedMaps(benchmark::State& state) {
    for (auto _ : state) {
        BigInt count = count_decorated_maps(5, {4});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CountDecoratedMaps);

void BM_RestrictionChain(benchmark::State& state) {
    const Partition lambda = dilate(Partition({3, 1}), static_cast<int>(state.range(0)));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        SplitMix64 rng = SplitMix64::for_trial(7, trial++);
        Partition mu = restrict_to(lambda, lambda.size() / 2, rng);
        benchmark::DoNotOptimize(mu);
    }
    state.SetItemsProcessed(state.iterations() * (lambda.size() / 2));  // steps
}
BENCHMARK(BM_RestrictionChain)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
