#include <benchmark/benchmark.h>

#include "dualmin/alternating.hpp"
#include "dualmin/brzozowski.hpp"
#include "dualmin/dkm.hpp"
#include "dualmin/linalg.hpp"
#include "dualmin/random.hpp"
#include "dualmin/weighted.hpp"

using namespace dualmin;

namespace {

// A fixed batch so each iteration does the same work.
std::vector<MooreAutomaton> moore_batch(std::size_t n) {
    Rng rng(n);
    std::vector<MooreAutomaton> out;
    for (int k = 0; k < 32; ++k) out.push_back(random_moore(rng, n, 3, 3));
    return out;
}

void BM_Brzozowski(benchmark::State& state) {
    const auto batch = moore_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& m : batch) benchmark::DoNotOptimize(brzozowski_minimise(m));
}

void BM_PartitionRefinement(benchmark::State& state) {
    const auto batch = moore_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& m : batch) benchmark::DoNotOptimize(partition_refinement_minimise(m));
}

void BM_DkmDuality(benchmark::State& state) {
    const auto batch = moore_batch(static_cast<std::size_t>(state.range(0)));
    std::vector<Dkm> models;
    for (const auto& m : batch) models.push_back(dkm_from_moore(m));
    for (auto _ : state)
        for (const auto& k : models) benchmark::DoNotOptimize(minimise_dkm(k));
}

void BM_Hnf(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(n);
    std::vector<IntMatrix> batch;
    for (int k = 0; k < 16; ++k) batch.push_back(random_int_matrix(rng, n, n, -9, 9));
    for (auto _ : state)
        for (const auto& a : batch) benchmark::DoNotOptimize(hnf(a));
}

template <Semiring S>
void BM_MinimiseWeighted(benchmark::State& state) {
    Rng rng(static_cast<std::uint64_t>(state.range(0)));
    std::vector<WeightedAutomaton<S>> batch;
    for (int k = 0; k < 16; ++k) batch.push_back(random_weighted<S>(rng, static_cast<std::size_t>(state.range(0)), 2, 2));
    for (auto _ : state)
        for (const auto& w : batch) benchmark::DoNotOptimize(minimise_wa(w));
}

void BM_AfaMinimalDfa(benchmark::State& state) {
    Rng rng(static_cast<std::uint64_t>(state.range(0)));
    std::vector<AlternatingAutomaton> batch;
    for (int k = 0; k < 8; ++k) batch.push_back(random_afa(rng, static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state)
        for (const auto& a : batch) benchmark::DoNotOptimize(minimal_dfa_for_afa(a));
}

}  // namespace

// Double reversal is exponential in the worst case; keep its sizes small.
BENCHMARK(BM_Brzozowski)->Arg(6)->Arg(8)->Arg(12);
BENCHMARK(BM_PartitionRefinement)->Arg(8)->Arg(12)->Arg(64);
// The definable closure can be exponential too.
BENCHMARK(BM_DkmDuality)->Arg(6)->Arg(8)->Arg(12);
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_MinimiseWeighted<IntegerSemiring>)->Arg(4)->Arg(8);
BENCHMARK(BM_MinimiseWeighted<RationalSemiring>)->Arg(4)->Arg(8);
BENCHMARK(BM_AfaMinimalDfa)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
