// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "tstfnbp/moments.hpp"
#include "tstfnbp/rng.hpp"

namespace tstfnbp {

/// Splits n_samples across `workers` streams as evenly as possible; stream w
/// receives samples_per_worker(n, workers, w) draws.  The partition depends
/// only on (n_samples, workers), so results are deterministic per
/// (seed, workers) pair.
inline std::size_t samples_per_worker(std::size_t n_samples, unsigned workers, unsigned w) {
    std::size_t base = n_samples / workers;
    return base + (w < n_samples % workers ? 1 : 0);
}

/// Runs `per_draw(rng, acc)` n_samples times, fanned across `workers`
/// threads.  Each worker owns RngStream(seed, w) and a private accumulator
/// vector of length `width`; per_draw adds one draw's contribution into acc.
/// Partial sums are reduced in stream order, so the result is bit-identical
/// for a fixed (seed, workers) pair regardless of thread scheduling.
template <typename PerDraw>
std::vector<double> monte_carlo_sums(std::uint64_t seed, unsigned workers,
                                     std::size_t n_samples, std::size_t width,
                                     PerDraw&& per_draw) {
    if (workers == 0) workers = 1;
    std::vector<std::vector<double>> partial(workers, std::vector<double>(width, 0.0));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            RngStream rng(seed, w);
            std::size_t n = samples_per_worker(n_samples, workers, w);
            for (std::size_t i = 0; i < n; ++i) per_draw(rng, partial[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<double> total(width, 0.0);
    for (unsigned w = 0; w < workers; ++w)
        for (std::size_t j = 0; j < width; ++j) total[j] += partial[w][j];
    return total;
}

/// Mean and standard error of a scalar statistic draw(rng) over n_samples
/// draws, using the deterministic worker partition above.
template <typename Draw>
MomentEstimate monte_carlo_mean(std::uint64_t seed, unsigned workers,
                                std::size_t n_samples, Draw&& draw) {
    auto sums = monte_carlo_sums(seed, workers, n_samples, 2,
                                 [&](RngStream& rng, std::vector<double>& acc) {
                                     double v = draw(rng);
                                     acc[0] += v;
                                     acc[1] += v * v;
                                 });
    double n = static_cast<double>(n_samples);
    MomentEstimate est;
    est.n_samples = n_samples;
    est.value = sums[0] / n;
    double var = sums[1] / n - est.value * est.value;
    est.std_error = var > 0 ? std::sqrt(var / n) : 0.0;
    return est;
}

}  // namespace tstfnbp
