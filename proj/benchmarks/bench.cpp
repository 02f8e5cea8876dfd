#include "ranklab/extremal.hpp"
#include "ranklab/geninv.hpp"
#include "ranklab/random.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ranklab;

Matrix deficient(std::size_t n, std::uint64_t salt) {
    Rng rng = makeRng(11, {salt, n});
    return randomOfRank(n, n, n / 2 + 1, rng);
}

void BM_RankBareiss(benchmark::State& state) {
    const Matrix a = deficient(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankBareiss)->DenseRange(2, 10, 2);

void BM_RankNaive(benchmark::State& state) {
    const Matrix a = deficient(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rankNaive(a));
}
BENCHMARK(BM_RankNaive)->DenseRange(2, 10, 2);

void BM_MoorePenrose(benchmark::State& state) {
    const Matrix a = deficient(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(moorePenrose(a));
}
BENCHMARK(BM_MoorePenrose)->DenseRange(2, 8, 2);

void BM_Drazin(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<Scalar> d(n * n, Scalar(0));
    for (std::size_t i = 0; i + 1 < n / 2; ++i) d[i * n + i + 1] = Scalar(1);
    for (std::size_t i = n / 2; i < n; ++i) d[i * n + i] = Scalar(static_cast<long>(i + 1));
    Rng rng = makeRng(11, {3, n});
    const Matrix p = randomNonsingular(n, rng);
    const Matrix a = p * Matrix(n, n, d) * inverse(p);
    for (auto _ : state) benchmark::DoNotOptimize(drazin(a));
}
BENCHMARK(BM_Drazin)->DenseRange(2, 8, 2);

void BM_CertifyBounds(benchmark::State& state) {
    const FamilyId id = static_cast<FamilyId>(state.range(0));
    Rng rng = makeRng(11, {4, static_cast<std::uint64_t>(state.range(0))});
    const PencilFamily f = randomFamilyInstance(id, 3, regimes(id).front(), rng);
    for (auto _ : state) {
        Rng draws = makeRng(12);
        benchmark::DoNotOptimize(certifyBounds(f, 16, draws));
    }
    state.SetLabel(std::string(familyName(id)));
}
BENCHMARK(BM_CertifyBounds)->DenseRange(0, 10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
