// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

#include "tstfnbp/analytics.hpp"
#include "tstfnbp/monte_carlo.hpp"
#include "tstfnbp/pde_verify.hpp"
#include "tstfnbp/samplers.hpp"
#include "tstfnbp/special_functions.hpp"

using namespace tstfnbp;

namespace {
const SeriesControl ctrl{};
const ProcessParams kSetB{0.5, 0.5, 1.0, 2.0, 1.0, 0.5};   // beta = 0.5
const ProcessParams kSetA{0.5, 1.0, 1.0, 2.0, 1.0, 0.5};   // beta = 1
const ProcessParams kSmooth{0.5, 0.5, 1.0, 2.0, 0.5, 1.0}; // mu = 0.5 variants
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("tmllp_pdf: series vs independent subordination quadrature") {
    for (double x : {0.3, 1.0, 2.0, 10.0}) {
        double series = tmllp_pdf(x, 1.0, kSmooth, ctrl);
        double quad = tmllp_pdf_quadrature(x, 1.0, kSmooth);
        CHECK(rel(series, quad) < 1e-7);
    }
}

TEST_CASE("tmllp_pdf integrates to one and decays in the far tail") {
    boost::math::quadrature::tanh_sinh<double> integ;
    double mass =
        integ.integrate([&](double x) { return tmllp_pdf(x, 1.0, kSmooth, ctrl); }, 1e-300,
                        50.0, 1e-9);
    CHECK(std::fabs(mass - 1.0) < 1e-7);
    // Deep-tail evaluations route through the quadrature fallback and stay
    // positive and decreasing.
    double p40 = tmllp_pdf(40.0, 1.0, kSmooth, ctrl);
    double p80 = tmllp_pdf(80.0, 1.0, kSmooth, ctrl);
    CHECK(p40 > 0.0);
    CHECK(p80 > 0.0);
    CHECK(p80 < p40);
}

TEST_CASE("tmllp_pdf enforces the lambda1 > mu^alpha constraint") {
    ProcessParams bad = kSmooth;
    bad.mu = 5.0;  // mu^alpha = sqrt(5) > lambda1 = 2
    CHECK_THROWS_AS(tmllp_pdf(1.0, 1.0, bad, ctrl), ConstraintError);
}

TEST_CASE("tmllp Levy density reproduces the Laplace exponent") {
    boost::math::quadrature::exp_sinh<double> integ;
    double lhs = integ.integrate(
        [&](double x) { return (1.0 - std::exp(-x)) * tmllp_levy_density(x, kSmooth, ctrl); },
        1e-9);
    double rhs = kSmooth.beta1 *
                 std::log(1.0 + (std::pow(kSmooth.mu + 1.0, kSmooth.alpha) -
                                 std::pow(kSmooth.mu, kSmooth.alpha)) /
                                    kSmooth.lambda1);
    CHECK(std::fabs(lhs - rhs) < 1e-10);
}

TEST_CASE("fpp_pmf: Poisson at beta = 1, Mittag-Leffler at n = 0, normalized") {
    CHECK(rel(fpp_pmf(2, 1.0, 1.0, 1.0), std::exp(-1.0) / 2.0) < 1e-14);
    // P(N_beta(t) = 0) = E_beta(-lambda t^beta).
    CHECK(rel(fpp_pmf(0, 1.0, 1.0, 0.5), std::exp(1.0) * std::erfc(1.0)) < 1e-12);
    double sum = 0.0;
    for (long n = 0; n <= 200; ++n) {
        double p = fpp_pmf(n, 1.0, 2.0, 0.7);
        CHECK(p >= 0.0);
        sum += p;
    }
    CHECK(std::fabs(sum - 1.0) < 1e-8);
}

TEST_CASE("nb_pmf examples") {
    CHECK(nb_pmf(0, 1, 1, 1, 1) == doctest::Approx(0.5).epsilon(1e-12));
    double sum = 0.0, mean = 0.0;
    for (long n = 0; n <= 400; ++n) {
        double p = nb_pmf(n, 1.0, 2.0, 4.0, 3.0);
        sum += p;
        mean += n * p;
    }
    CHECK(std::fabs(sum - 1.0) < 1e-12);
    CHECK(std::fabs(mean - 1.5) < 1e-10);  // size*odds = 3 * (2/4)
}

TEST_CASE("fnbp_pmf collapses to the negative binomial at beta = 1") {
    for (long n = 0; n <= 10; ++n)
        CHECK(std::fabs(fnbp_pmf(n, 1.0, 1.0, 2.0, 1.0, 1.0) - nb_pmf(n, 1.0, 1.0, 2.0, 1.0)) <
              1e-12);
    // Fractional case: partial mass over n <= 10 (frozen reference value).
    double sum = 0.0;
    for (long n = 0; n <= 10; ++n) sum += fnbp_pmf(n, 1.0, 1.0, 2.0, 1.0, 0.5);
    CHECK(sum == doctest::Approx(0.999938416049).epsilon(1e-9));
}

TEST_CASE("tstfnbp pmf sums to one with certified tail") {
    for (const ProcessParams& p : {kSetA, kSetB}) {
        QuadratureMomentSource src(1.0, p);
        PmfVector v = tstfnbp_pmf_vector(15, 1.0, p, ctrl, src);
        double sum = 0.0;
        for (double q : v.probs) {
            CHECK(q >= 0.0);
            sum += q;
        }
        CHECK(sum + v.tail_bound <= 1.0 + 1e-8);
        CHECK(std::fabs(sum + v.tail_bound - 1.0) < 1e-8);
    }
}

TEST_CASE("tstfnbp p(0,t) equals the conditioning identity Monte Carlo") {
    QuadratureMomentSource src(1.0, kSetB);
    double p0 = tstfnbp_pmf(0, 1.0, kSetB, ctrl, src);
    auto e = monte_carlo_mean(555, 1, 20000, [&](RngStream& g) {
        double m = sample_tmllp_path(kSetB, {1.0}, g).values.back();
        return mittag_leffler(kSetB.beta, 1.0, -kSetB.lambda * std::pow(m, kSetB.beta), ctrl);
    });
    CHECK(std::fabs(e.value - p0) < 3.0 * e.std_error);
}

TEST_CASE("Laplace transform equals pgf at matching argument and Monte Carlo") {
    double lt = tstfnbp_laplace(1.0, 1.0, kSetB, ctrl);
    double pg = tstfnbp_pgf(std::exp(-1.0), 1.0, kSetB, ctrl);
    CHECK(rel(lt, pg) < 1e-12);
    auto e = monte_carlo_mean(556, 1, 20000, [&](RngStream& g) {
        return std::exp(-sample_tstfnbp_path(kSetB, {1.0}, g).values.back());
    });
    CHECK(std::fabs(e.value - lt) < 3.0 * e.std_error);
}

TEST_CASE("moment identities: gap = variance - mean > 0") {
    for (double t : {0.5, 1.0, 10.0}) {
        double mean = tstfnbp_mean(t, kSmooth);
        double var = tstfnbp_variance(t, kSmooth);
        double gap = dispersion_gap(t, kSmooth);
        CHECK(std::fabs((var - mean) - gap) < 1e-10 * var);
        CHECK(gap > 0.0);
    }
}

TEST_CASE("covariance collapses to the variance at s = t") {
    RngStream rng(557, 0);
    MomentEstimate cov = tstfnbp_covariance(1.0, 1.0, kSmooth, rng, 50000);
    CHECK(std::fabs(cov.value - tstfnbp_variance(1.0, kSmooth)) < 3.0 * cov.std_error);
    // Correlation at s = t is 1 within the same error.
    RngStream rng2(558, 0);
    MomentEstimate corr = tstfnbp_correlation(1.0, 1.0, kSmooth, rng2, 50000);
    CHECK(std::fabs(corr.value - 1.0) < 3.0 * corr.std_error + 1e-9);
}

TEST_CASE("Levy measure: series vs direct quadrature and total mass") {
    const ProcessParams p{0.5, 1.0, 1.0, 2.0, 1.0, 2.0};
    boost::math::quadrature::exp_sinh<double> integ;
    for (long k = 1; k <= 3; ++k) {
        double series = levy_measure_beta1(k, p, ctrl);
        double quad = integ.integrate(
            [&](double t) {
                double lp = k * std::log(p.lambda * t) - std::lgamma(k + 1.0) - p.lambda * t;
                return std::exp(lp) * tmllp_levy_density(t, p, ctrl);
            },
            1e-10);
        CHECK(std::fabs(series - quad) < 1e-6);
    }
    double total = 0.0;
    for (long k = 1; k <= 60; ++k) total += levy_measure_beta1(k, p, ctrl);
    double rhs = integ.integrate(
        [&](double t) {
            return (1.0 - std::exp(-p.lambda * t)) * tmllp_levy_density(t, p, ctrl);
        },
        1e-10);
    CHECK(std::fabs(total - rhs) < 1e-5);
}

TEST_CASE("first passage: unit partition and non-negative density") {
    for (double t : {0.5, 1.0, 2.0}) {
        double s = first_passage(3, t, kSetB, ctrl, FirstPassageMode::survival);
        double c = first_passage(3, t, kSetB, ctrl, FirstPassageMode::cdf);
        CHECK(s + c == 1.0);
        double disc = 0.0;
        double d = first_passage(3, t, kSetB, ctrl, FirstPassageMode::density, &disc);
        CHECK(d >= 0.0);
        CHECK(disc < 1e-6);
    }
    // Survival decreases in t (the process keeps counting).
    CHECK(first_passage(3, 2.0, kSetB, ctrl) < first_passage(3, 0.5, kSetB, ctrl));
}

TEST_CASE("lrd slope recovers -beta on a coarse budget") {
    RngStream rng(559, 0);
    LrdEstimate e = lrd_slope(1.0, {10, 30, 100, 300, 1000}, kSmooth, rng, 20000);
    CHECK(!e.noise_exceeds_fit);
    CHECK(std::fabs(e.slope + kSmooth.beta) < 0.1);
}
