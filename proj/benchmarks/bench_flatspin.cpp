#include <benchmark/benchmark.h>

#include <random>

#include "flatspin/char_algebra.hpp"
#include "flatspin/constructions.hpp"
#include "flatspin/covers.hpp"
#include "flatspin/gf2_poly.hpp"

using namespace flatspin;

namespace {

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t d, std::size_t terms) {
    std::uniform_int_distribution<std::uint32_t> exp(0, 2);
    std::vector<Monomial> out;
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(d);
        for (auto& v : e) v = exp(rng);
        out.emplace_back(std::move(e));
    }
    return Gf2Poly::from_terms(d, std::move(out));
}

void BM_PolyMul(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto p = random_poly(rng, 6, 40);
    const auto q = random_poly(rng, 6, 40);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul);

void BM_IsFree(benchmark::State& state) {
    const auto F = build_stage(Stage::F, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_free(F));
}
BENCHMARK(BM_IsFree)->DenseRange(4, 8);

void BM_SwClass(benchmark::State& state) {
    const auto F = build_stage(Stage::F, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sw_class(F));
}
BENCHMARK(BM_SwClass)->DenseRange(2, 8);

void BM_DegreeBasis(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto A = build_stage(Stage::A, d);
    for (auto _ : state) {
        const GradedIdeal ideal = GradedIdeal::from_matrix(A);
        benchmark::DoNotOptimize(ideal.rank(3));
    }
}
BENCHMARK(BM_DegreeBasis)->DenseRange(2, 8);

void BM_EnumerateSubspaces(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(d, true));
}
BENCHMARK(BM_EnumerateSubspaces)->DenseRange(4, 8);

void BM_CoverSweep(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto F = build_stage(Stage::F, d);
    for (auto _ : state) benchmark::DoNotOptimize(verify_minimal_nonspin(F));
}
BENCHMARK(BM_CoverSweep)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
