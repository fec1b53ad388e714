#include <benchmark/benchmark.h>

#include <random>

#include "dolce/cohomology.hpp"
#include "dolce/corpus.hpp"
#include "dolce/harmonic.hpp"
#include "dolce/model.hpp"
#include "dolce/spectral.hpp"

using namespace dolce;

namespace {

Mat random_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(Rational(num(rng), den(rng)));
    return m;
}

void bm_rref(benchmark::State& state) {
    std::mt19937_64 rng(5);
    Mat m = random_matrix(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(bm_rref)->Arg(10)->Arg(20)->Arg(40);

void bm_model_build(benchmark::State& state) {
    const InputDocument& doc = corpus_find("sol3-A")->document;
    for (auto _ : state) {
        auto model = Model::build(doc);
        benchmark::DoNotOptimize(model->m());
    }
}
BENCHMARK(bm_model_build);

void bm_full_spectral_sequence(benchmark::State& state) {
    const char* keys[2] = {"sol3-C", "cu-nilpotent-s1"};
    auto model = Model::build(corpus_find(keys[state.range(0)])->document);
    for (auto _ : state) {
        SpectralSequence ss(*model);
        benchmark::DoNotOptimize(ss.e_infinity().second);
    }
}
BENCHMARK(bm_full_spectral_sequence)->Arg(0)->Arg(1);

void bm_dolbeault_grid(benchmark::State& state) {
    auto model = Model::build(corpus_find("cu-nilpotent-s0")->document);
    for (auto _ : state) benchmark::DoNotOptimize(dolbeault_grid(*model));
}
BENCHMARK(bm_dolbeault_grid);

void bm_harmonic_row(benchmark::State& state) {
    auto model = Model::build(corpus_find("sol3-A")->document);
    HarmonicContext ctx(*model);
    for (auto _ : state) {
        DelbarMubar row(ctx, 1);
        benchmark::DoNotOptimize(row.harmonics(1).dim());
    }
}
BENCHMARK(bm_harmonic_row);

}  // namespace

BENCHMARK_MAIN();
