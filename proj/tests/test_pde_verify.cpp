// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>

#include "tstfnbp/pde_verify.hpp"

using namespace tstfnbp;

namespace {
const ProcessParams kSmooth{0.5, 0.5, 1.0, 2.0, 0.5, 1.0};
const ProcessParams kCount{0.5, 0.5, 1.0, 2.0, 1.0, 0.5};
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("stable density: alpha = 1/2 closed form (Levy distribution)") {
    for (double x : {0.3, 1.0, 4.0})
        for (double t : {0.5, 1.0, 2.0}) {
            // g_{1/2}(x,t) = t/(2 sqrt(pi)) x^{-3/2} exp(-t^2/(4x))
            double want = t / (2.0 * std::sqrt(std::acos(-1.0))) * std::pow(x, -1.5) *
                          std::exp(-t * t / (4.0 * x));
            CHECK(rel(stable_density(0.5, x, t), want) < 1e-8);
        }
    CHECK(std::fabs(stable_density(0.5, 1.0, 1.0) - 0.219696) < 1e-6);
}

TEST_CASE("stable density integrates to one") {
    boost::math::quadrature::exp_sinh<double> integ;
    for (double alpha : {0.4, 0.7}) {
        double mass = integ.integrate([&](double x) { return stable_density(alpha, x, 1.0); },
                                      1e-9);
        CHECK(std::fabs(mass - 1.0) < 1e-6);
    }
}

TEST_CASE("stable cdf: closed form at alpha = 1/2, monotone, consistent") {
    for (double x : {0.3, 1.0, 4.0}) {
        double want = std::erfc(1.0 / (2.0 * std::sqrt(x)));
        CHECK(rel(stable_cdf(0.5, x, 1.0), want) < 1e-8);
    }
    double prev = 0.0;
    for (double x = 0.1; x < 30.0; x *= 2.0) {
        double c = stable_cdf(0.7, x, 1.0);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(stable_cdf(0.7, 1e6, 1.0) > 0.999);
}

TEST_CASE("tempered stable density: tilt identity and Laplace transform") {
    const double alpha = 0.5, mu = 1.0, t = 1.0;
    for (double x : {0.2, 1.0, 3.0}) {
        double want = std::exp(-mu * x + std::pow(mu, alpha) * t) * stable_density(alpha, x, t);
        CHECK(rel(tempered_stable_density(alpha, mu, x, t), want) < 1e-10);
    }
    boost::math::quadrature::exp_sinh<double> integ;
    for (double u : {0.5, 2.0}) {
        double lt = integ.integrate(
            [&](double x) { return std::exp(-u * x) * tempered_stable_density(alpha, mu, x, t); },
            1e-9);
        double want = std::exp(-t * (std::pow(mu + u, alpha) - std::pow(mu, alpha)));
        CHECK(rel(lt, want) < 1e-6);
    }
}

TEST_CASE("gamma-density PDE residual (identity at tau = 1)") {
    ResidualReport a = gamma_pde_residual(1.0, 1.0, kSmooth);
    CHECK(a.rel_residual < 1e-6);
    // x at the t = 2 density mode (shape 2, rate 2 -> mode 0.5).
    ResidualReport b = gamma_pde_residual(0.5, 2.0, kSmooth);
    CHECK(b.rel_residual < 1e-6);
    // Second-order step convergence of the difference scheme.
    double d1 = gamma_pde_residual(1.0, 1.0, kSmooth, 0.08).discretization_estimate;
    double d2 = gamma_pde_residual(1.0, 1.0, kSmooth, 0.04).discretization_estimate;
    CHECK(d1 / d2 > 2.5);
}

TEST_CASE("subordinator PDE residual (series lhs vs quadrature rhs)") {
    CHECK(tmllp_pde_residual(1.0, 1.0, kSmooth).rel_residual < 1e-4);
    CHECK(tmllp_pde_residual(0.3, 2.0, kSmooth).rel_residual < 1e-4);
}

TEST_CASE("counting-process PDE residual at n = 0") {
    ResidualReport r = tstfnbp_pde_residual(0, 1.0, kCount);
    CHECK(r.rel_residual < 1e-3);
}
