// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "tstfnbp/analytics.hpp"
#include "tstfnbp/moments.hpp"
#include "tstfnbp/pde_verify.hpp"
#include "tstfnbp/samplers.hpp"
#include "tstfnbp/special_functions.hpp"

using namespace tstfnbp;

namespace {
const SeriesControl ctrl{};
const ProcessParams kParams{0.5, 0.5, 1.0, 2.0, 0.5, 1.0};
}  // namespace

static void BM_MittagLefflerSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(0.5, 1.0, -2.0, ctrl));
}
BENCHMARK(BM_MittagLefflerSeries);

static void BM_MittagLefflerIntegral(benchmark::State& state) {
    // Strongly negative argument: alternating series is abandoned for the
    // integral representation.
    for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(0.5, 1.0, -40.0, ctrl));
}
BENCHMARK(BM_MittagLefflerIntegral);

static void BM_PrabhakarMl(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(prabhakar_ml(0.5, 3.5, 6.0, -1.0, ctrl));
}
BENCHMARK(BM_PrabhakarMl);

static void BM_TmllpPdfSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tmllp_pdf(1.0, 1.0, kParams, ctrl));
}
BENCHMARK(BM_TmllpPdfSeries);

static void BM_TmllpPdfQuadrature(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tmllp_pdf_quadrature(1.0, 1.0, kParams));
}
BENCHMARK(BM_TmllpPdfQuadrature);

static void BM_StableDensity(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(stable_density(0.7, 1.0, 1.0));
}
BENCHMARK(BM_StableDensity);

static void BM_FppPmf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fpp_pmf(5, 1.0, 1.0, 0.5, ctrl));
}
BENCHMARK(BM_FppPmf);

static void BM_TstfnbpPmfVector(benchmark::State& state) {
    for (auto _ : state) {
        QuadratureMomentSource src(1.0, kParams);
        benchmark::DoNotOptimize(tstfnbp_pmf_vector(10, 1.0, kParams, ctrl, src));
    }
}
BENCHMARK(BM_TstfnbpPmfVector);

static void BM_SampleStableUnit(benchmark::State& state) {
    RngStream rng(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(sample_stable_unit(0.5, rng));
}
BENCHMARK(BM_SampleStableUnit);

static void BM_SampleTemperedStable(benchmark::State& state) {
    RngStream rng(2, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_tempered_stable_increment(0.5, 1.0, 1.0, rng));
}
BENCHMARK(BM_SampleTemperedStable);

static void BM_SampleTstfnbpPath(benchmark::State& state) {
    RngStream rng(3, 0);
    const std::vector<double> grid{0.5, 1.0, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(sample_tstfnbp_path(kParams, grid, rng));
}
BENCHMARK(BM_SampleTstfnbpPath);

BENCHMARK_MAIN();
