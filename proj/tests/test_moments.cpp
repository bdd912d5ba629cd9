// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "tstfnbp/monte_carlo.hpp"
#include "tstfnbp/moments.hpp"
#include "tstfnbp/samplers.hpp"

using namespace tstfnbp;

namespace {
const ProcessParams kParams{0.5, 0.5, 1.0, 2.0, 0.5, 1.0};
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("tmllp_laplace closed form") {
    // (lambda1 / (lambda1 - mu^alpha + (mu+u)^alpha))^{beta1 t}
    for (double u : {0.0, 0.5, 2.0})
        for (double t : {0.5, 1.0, 3.0}) {
            double denom = kParams.lambda1 - std::pow(kParams.mu, kParams.alpha) +
                           std::pow(kParams.mu + u, kParams.alpha);
            double want = std::pow(kParams.lambda1 / denom, kParams.beta1 * t);
            CHECK(rel(tmllp_laplace(u, t, kParams), want) < 1e-14);
        }
    CHECK(tmllp_laplace(0.0, 1.0, kParams) == doctest::Approx(1.0));
}

TEST_CASE("transform derivatives agree with central differences") {
    const double u = 1.0, t = 1.0, h = 1e-4;
    for (unsigned n : {1u, 2u}) {
        auto d = [&](double uu) {
            return n == 1 ? tmllp_laplace_derivative(uu, t, kParams, 0)
                          : tmllp_laplace_derivative(uu, t, kParams, 1);
        };
        double fd = (d(u + h) - d(u - h)) / (2.0 * h);
        double exact = tmllp_laplace_derivative(u, t, kParams, n);
        CHECK(rel(fd, exact) < 1e-6);
    }
}

TEST_CASE("integer moments: jet route equals hand-derived closed forms") {
    for (unsigned n : {1u, 2u, 3u, 4u})
        for (double t : {0.5, 1.0, 5.0}) {
            double closed = tmllp_integer_moment_closed(n, t, kParams);
            double jet = tmllp_fractional_moment(static_cast<double>(n), t, kParams);
            CHECK(rel(jet, closed) < 1e-10);
        }
}

TEST_CASE("fractional moments match Monte Carlo") {
    for (double q : {0.5, 1.3}) {
        auto e = monte_carlo_mean(777, 1, 20000, [&](RngStream& g) {
            return std::pow(sample_tmllp_path(kParams, {1.0}, g).values.back(), q);
        });
        double ana = tmllp_fractional_moment(q, 1.0, kParams);
        INFO("q = " << q << ": " << ana << " vs " << e.value << " +- " << e.std_error);
        CHECK(std::fabs(e.value - ana) < 3.0 * e.std_error);
    }
}

TEST_CASE("moment asymptote: exact at q = 1, ratio -> 1 at large t") {
    for (double t : {0.5, 1.0, 100.0})
        CHECK(rel(tmllp_fractional_moment(1.0, t, kParams),
                  tmllp_integer_moment_closed(1, t, kParams)) < 1e-10);
    // Monotone approach of the ratio toward 1 for growing t.
    for (double q : {0.3, 0.5, 1.7}) {
        double r100 = tmllp_fractional_moment(q, 100.0, kParams) /
                      tmllp_moment_asymptote(q, 100.0, kParams);
        double r1000 = tmllp_fractional_moment(q, 1000.0, kParams) /
                       tmllp_moment_asymptote(q, 1000.0, kParams);
        CHECK(std::fabs(r1000 - 1.0) < std::fabs(r100 - 1.0) + 1e-12);
        CHECK(std::fabs(r1000 - 1.0) < 0.02);
    }
    // The asymptote needs tempering: mu = 0 has no linear growth regime.
    ProcessParams untempered = kParams;
    untempered.mu = 0.0;
    CHECK_THROWS(tmllp_moment_asymptote(0.5, 1.0, untempered));
}

TEST_CASE("moment sources agree: quadrature vs Monte Carlo batch") {
    QuadratureMomentSource quad(1.0, kParams);
    RngStream rng(778, 0);
    MonteCarloMomentSource mc(1.0, kParams, rng, 20000);
    for (std::size_t k : {1ul, 2ul, 4ul}) {
        double a = quad.beta_power_moment(k);
        double b = mc.beta_power_moment(k);
        // Loose band: the MC source carries its own sampling noise.
        CHECK(rel(b, a) < 0.05);
    }
    // Cached lookups are stable.
    CHECK(quad.beta_power_moment(2) == quad.beta_power_moment(2));
}
