// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "tstfnbp/monte_carlo.hpp"
#include "tstfnbp/moments.hpp"
#include "tstfnbp/pde_verify.hpp"
#include "tstfnbp/samplers.hpp"
#include "tstfnbp/special_functions.hpp"

using namespace tstfnbp;

namespace {
constexpr std::size_t kDraws = 20000;

// Empirical E[exp(-u X)] with standard error, X drawn by `draw`.
MomentEstimate empirical_laplace(double u, std::size_t n, std::uint64_t seed,
                                 const std::function<double(RngStream&)>& draw) {
    return monte_carlo_mean(seed, 1, n, [&](RngStream& g) { return std::exp(-u * draw(g)); });
}

void check_laplace(const char* what, double analytic, const MomentEstimate& e) {
    INFO(what << ": analytic " << analytic << " vs " << e.value << " +- " << e.std_error);
    CHECK(std::fabs(e.value - analytic) < 3.0 * e.std_error);
}
}  // namespace

TEST_CASE("RngStream reproducibility and stream independence") {
    RngStream a(123, 7), b(123, 7), c(123, 8);
    bool same = true, diff = false;
    for (int i = 0; i < 100; ++i) {
        double ua = a.uniform(), ub = b.uniform(), uc = c.uniform();
        same = same && (ua == ub);
        diff = diff || (ua != uc);
        CHECK(ua > 0.0);
        CHECK(ua < 1.0);
    }
    CHECK(same);
    CHECK(diff);
}

TEST_CASE("stable sampler matches its Laplace transform") {
    for (double alpha : {0.3, 0.5, 0.8})
        for (double u : {0.5, 2.0}) {
            auto e = empirical_laplace(u, kDraws, 900 + static_cast<std::uint64_t>(100 * alpha),
                                       [&](RngStream& g) { return sample_stable_unit(alpha, g); });
            check_laplace("stable", std::exp(-std::pow(u, alpha)), e);
        }
}

TEST_CASE("stable sampler matches the quadrature cdf (Kolmogorov-Smirnov)") {
    const double alpha = 0.7;
    const std::size_t n = 20000;
    RngStream rng(4242, 0);
    std::vector<double> xs(n);
    for (auto& x : xs) x = sample_stable_unit(alpha, rng);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double F = stable_cdf(alpha, xs[i], 1.0);
        ks = std::max(ks, std::max(std::fabs(F - double(i) / n), std::fabs(F - double(i + 1) / n)));
    }
    double critical = 1.628 / std::sqrt(double(n));  // 1% level
    INFO("KS = " << ks << " critical(1%) = " << critical);
    CHECK(ks < critical);
}

TEST_CASE("gamma increment matches its Laplace transform") {
    const double lambda1 = 2.0, beta1 = 1.5;
    for (double t : {0.5, 2.0})
        for (double u : {0.5, 2.0}) {
            auto e = empirical_laplace(u, kDraws, 910, [&](RngStream& g) {
                return sample_gamma_increment(lambda1, beta1, t, g);
            });
            check_laplace("gamma", std::pow(lambda1 / (lambda1 + u), beta1 * t), e);
        }
}

TEST_CASE("tempered stable increment matches its Laplace transform") {
    const double alpha = 0.5, mu = 1.0;
    for (double t : {0.5, 1.0, 2.0})
        for (double u : {0.5, 2.0}) {
            auto e = empirical_laplace(u, kDraws, 920, [&](RngStream& g) {
                return sample_tempered_stable_increment(alpha, mu, t, g);
            });
            check_laplace("tempered stable",
                          std::exp(-t * (std::pow(mu + u, alpha) - std::pow(mu, alpha))), e);
        }
}

TEST_CASE("tmllp path matches Eq-(5)-style Laplace transform and is monotone") {
    const ProcessParams p{0.5, 0.5, 1.0, 2.0, 1.0, 0.5};
    for (double u : {0.5, 2.0}) {
        auto e = empirical_laplace(u, kDraws, 930, [&](RngStream& g) {
            return sample_tmllp_path(p, {1.0}, g).values.back();
        });
        check_laplace("tmllp", tmllp_laplace(u, 1.0, p), e);
    }
    RngStream rng(7, 0);
    SamplePath path = sample_tmllp_path(p, {0.5, 1.0, 2.0}, rng);
    CHECK(path.times.front() == 0.0);
    CHECK(path.values.front() == 0.0);
    CHECK_NOTHROW(path.check_monotone());
}

TEST_CASE("inverse stable sampler matches the Mittag-Leffler transform") {
    const double beta = 0.5;
    SeriesControl ctrl;
    for (double t : {0.5, 1.0, 2.0})
        for (double u : {0.5, 2.0}) {
            auto e = empirical_laplace(u, kDraws, 940, [&](RngStream& g) {
                return sample_inverse_stable(beta, t, g);
            });
            check_laplace("inverse stable",
                          mittag_leffler(beta, 1.0, -u * std::pow(t, beta), ctrl), e);
        }
}

TEST_CASE("Mittag-Leffler waiting times collapse to exponential at beta = 1") {
    auto e = monte_carlo_mean(950, 1, kDraws, [](RngStream& g) {
        return sample_ml_waiting_time(1.0, 2.0, g);
    });
    CHECK(std::fabs(e.value - 0.5) < 3.0 * e.std_error);
}

TEST_CASE("fpp counts are Poisson at beta = 1") {
    const double lambda = 1.5;
    auto e = monte_carlo_mean(960, 1, kDraws, [&](RngStream& g) {
        return static_cast<double>(sample_fpp_counts(1.0, lambda, {1.0}, g)[0]);
    });
    CHECK(std::fabs(e.value - lambda) < 3.0 * e.std_error);
}

TEST_CASE("fpp counts are non-decreasing along the grid") {
    RngStream rng(970, 0);
    for (int i = 0; i < 200; ++i) {
        auto counts = sample_fpp_counts(0.6, 1.0, {0.5, 1.0, 2.0, 4.0}, rng);
        for (std::size_t j = 1; j < counts.size(); ++j) CHECK(counts[j] >= counts[j - 1]);
        CHECK(counts[0] >= 0);
    }
}

TEST_CASE("tstfnbp paths are integer, monotone, reproducible") {
    const ProcessParams p{0.5, 0.5, 1.0, 2.0, 1.0, 0.5};
    RngStream a(980, 3), b(980, 3);
    SamplePath qa = sample_tstfnbp_path(p, {0.5, 1.0, 2.0}, a);
    SamplePath qb = sample_tstfnbp_path(p, {0.5, 1.0, 2.0}, b);
    CHECK(qa.values == qb.values);
    CHECK_NOTHROW(qa.check_monotone());
    for (double v : qa.values) CHECK(v == std::floor(v));
}

TEST_CASE("monte_carlo_sums is deterministic per (seed, workers)") {
    auto run = [](unsigned workers) {
        return monte_carlo_sums(11, workers, 1001, 1, [](RngStream& g, std::vector<double>& a) {
            a[0] += g.uniform();
        });
    };
    CHECK(run(3) == run(3));
    CHECK(run(1) == run(1));
}
