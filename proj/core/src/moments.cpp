// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include "tstfnbp/moments.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "tstfnbp/samplers.hpp"

namespace tstfnbp {

namespace {

// Taylor coefficients (in the scaled variable v, u = u0 + c v) of
// phi(u) = (lambda1 / h(u))^{beta1 t}, h(u) = lambda1 - mu^alpha + (mu+u)^alpha.
// Returned: p[j] = phi-jet coefficient, so phi^{(n)}(u0) = n! p[n] / c^n.
std::vector<double> laplace_jet(double u0, double t, const ProcessParams& p,
                                unsigned order, double scale) {
    const double base = p.mu + u0;
    if (!(base > 0))
        throw std::domain_error("laplace_jet: mu + u must be positive");
    const unsigned n = order;

    // h-jet (scaled): h[j] = binom(alpha, j) base^{alpha-j} scale^j
    std::vector<double> h(n + 1);
    h[0] = p.lambda1 - std::pow(p.mu, p.alpha) + std::pow(base, p.alpha);
    double binom = 1.0;
    double ratio = scale / base;
    double pw = std::pow(base, p.alpha);
    for (unsigned j = 1; j <= n; ++j) {
        binom *= (p.alpha - static_cast<double>(j - 1)) / static_cast<double>(j);
        pw *= ratio;
        h[j] = binom * pw;
    }

    // w = log(h) jet
    std::vector<double> w(n + 1);
    w[0] = std::log(h[0]);
    for (unsigned m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (unsigned k = 1; k < m; ++k)
            acc += static_cast<double>(k) * w[k] * h[m - k];
        w[m] = (h[m] - acc / static_cast<double>(m)) / h[0];
    }

    // phi = exp(-beta1 t (w - log lambda1)) jet
    const double bt = p.beta1 * t;
    std::vector<double> out(n + 1);
    out[0] = std::exp(-bt * (w[0] - std::log(p.lambda1)));
    for (unsigned m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (unsigned k = 1; k <= m; ++k)
            acc += static_cast<double>(k) * (-bt * w[k]) * out[m - k];
        out[m] = acc / static_cast<double>(m);
    }
    return out;
}

bool is_integer(double q) { return std::fabs(q - std::round(q)) < 1e-12; }

}  // namespace

double tmllp_laplace(double u, double t, const ProcessParams& params) {
    params.validate();
    if (u < 0) throw std::domain_error("tmllp_laplace: u must be non-negative");
    if (t < 0) throw std::domain_error("tmllp_laplace: t must be non-negative");
    double mua = std::pow(params.mu, params.alpha);
    double h = params.lambda1 - mua + std::pow(params.mu + u, params.alpha);
    return std::exp(params.beta1 * t * (std::log(params.lambda1) - std::log(h)));
}

double tmllp_laplace_derivative(double u, double t, const ProcessParams& params, unsigned n) {
    params.validate();
    if (n == 0) return tmllp_laplace(u, t, params);
    const double scale = params.mu + u;
    auto jet = laplace_jet(u, t, params, n, scale);
    double lfact = std::lgamma(static_cast<double>(n) + 1.0);
    double mag = std::exp(lfact - static_cast<double>(n) * std::log(scale));
    return jet[n] * mag;
}

double tmllp_integer_moment_closed(unsigned n, double t, const ProcessParams& p) {
    p.validate();
    if (n == 0) return 1.0;
    if (!(p.mu > 0))
        throw std::domain_error("tmllp_integer_moment_closed: integer moments require mu > 0");
    if (n > 4)
        throw std::domain_error("tmllp_integer_moment_closed: only orders 0..4 are hard-coded");
    const double a = p.alpha, h0 = p.lambda1;
    const double d1 = a * std::pow(p.mu, a - 1.0);
    const double d2 = a * (a - 1.0) * std::pow(p.mu, a - 2.0);
    const double d3 = a * (a - 1.0) * (a - 2.0) * std::pow(p.mu, a - 3.0);
    const double d4 = a * (a - 1.0) * (a - 2.0) * (a - 3.0) * std::pow(p.mu, a - 4.0);
    const double r1 = d1 / h0;
    const double lh1 = r1;
    const double lh2 = d2 / h0 - r1 * r1;
    const double lh3 = d3 / h0 - 3.0 * d1 * d2 / (h0 * h0) + 2.0 * r1 * r1 * r1;
    const double lh4 = d4 / h0 - (4.0 * d1 * d3 + 3.0 * d2 * d2) / (h0 * h0) +
                       12.0 * d1 * d1 * d2 / (h0 * h0 * h0) - 6.0 * r1 * r1 * r1 * r1;
    const double bt = p.beta1 * t;
    const double k1 = bt * lh1;
    const double k2 = -bt * lh2;
    const double k3 = bt * lh3;
    const double k4 = -bt * lh4;
    switch (n) {
        case 1: return k1;
        case 2: return k2 + k1 * k1;
        case 3: return k3 + 3.0 * k1 * k2 + k1 * k1 * k1;
        default:
            return k4 + 4.0 * k1 * k3 + 3.0 * k2 * k2 + 6.0 * k1 * k1 * k2 +
                   k1 * k1 * k1 * k1;
    }
}

double tmllp_fractional_moment(double q, double t, const ProcessParams& params,
                               const QuadControl& quad) {
    params.validate();
    if (q < 0) throw std::domain_error("tmllp_fractional_moment: q must be >= 0");
    if (!(t > 0)) throw std::domain_error("tmllp_fractional_moment: t must be positive");
    if (q == 0.0) return 1.0;
    if (params.mu == 0.0 && q >= params.alpha)
        throw std::domain_error(
            "tmllp_fractional_moment: moment infinite for mu = 0 and q >= alpha");

    if (is_integer(q) && params.mu > 0) {
        auto n = static_cast<unsigned>(std::llround(q));
        if (n <= 4) return tmllp_integer_moment_closed(n, t, params);
        auto jet = laplace_jet(0.0, t, params, n, params.mu);
        double lfact = std::lgamma(static_cast<double>(n) + 1.0);
        double m = jet[n] * std::exp(lfact - static_cast<double>(n) * std::log(params.mu));
        return (n % 2 == 0) ? m : -m;
    }

    const auto n = static_cast<unsigned>(std::ceil(q));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;

    // Scale of the transform's decay in u: the n-th derivative decays over
    // u ~ (n+1)/E[M]; fall back to 1 when the mean is not finite (mu = 0).
    double c = 1.0;
    if (params.mu > 0) {
        double mean = params.alpha * params.beta1 * std::pow(params.mu, params.alpha - 1.0) *
                      t / params.lambda1;
        c = (static_cast<double>(n) + 1.0) / std::max(mean, 1e-12);
    }

    auto integrand = [&](double s) {
        double u = c * s / (1.0 - s);
        double du = c / ((1.0 - s) * (1.0 - s));
        double deriv = sign * tmllp_laplace_derivative(u, t, params, n);
        return std::pow(u, static_cast<double>(n) - q - 1.0) * deriv * du;
    };
    boost::math::quadrature::tanh_sinh<double> integrator(quad.max_refinements);
    double err = 0.0, l1 = 0.0;
    double val;
    try {
        val = integrator.integrate(integrand, 0.0, 1.0, quad.tol, &err, &l1);
    } catch (const std::exception& e) {
        throw QuadratureError(std::string("tmllp_fractional_moment: ") + e.what());
    }
    if (!std::isfinite(val) || (l1 > 0 && err > 1e-4 * l1))
        throw QuadratureError("tmllp_fractional_moment: quadrature did not converge");
    return val / std::tgamma(static_cast<double>(n) - q);
}

double tmllp_moment_asymptote(double q, double t, const ProcessParams& params) {
    params.validate();
    if (!(q > 0)) throw std::domain_error("tmllp_moment_asymptote: q must be positive");
    if (!(params.mu > 0))
        throw std::domain_error("tmllp_moment_asymptote: undefined for mu = 0");
    double rate = params.alpha * params.beta1 * std::pow(params.mu, params.alpha - 1.0) /
                  params.lambda1;
    return std::pow(rate * t, q);
}

QuadratureMomentSource::QuadratureMomentSource(double t, const ProcessParams& params,
                                               QuadControl quad)
    : t_(t), params_(params), quad_(quad) {
    params_.validate();
}

double QuadratureMomentSource::beta_power_moment(std::size_t k) {
    if (k < cache_.size() && cache_[k] != 0.0) return cache_[k];
    double q = params_.beta * static_cast<double>(k);
    double m = tmllp_fractional_moment(q, t_, params_, quad_);
    if (k >= cache_.size()) cache_.resize(k + 1, 0.0);
    cache_[k] = m;
    return m;
}

MonteCarloMomentSource::MonteCarloMomentSource(double t, const ProcessParams& params,
                                               RngStream& rng, std::size_t n_samples)
    : beta_(params.beta) {
    params.validate();
    if (n_samples == 0)
        throw std::invalid_argument("MonteCarloMomentSource: n_samples must be positive");
    draws_.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        double g = sample_gamma_increment(params.lambda1, params.beta1, t, rng);
        draws_.push_back(sample_tempered_stable_increment(params.alpha, params.mu, g, rng));
    }
}

double MonteCarloMomentSource::beta_power_moment(std::size_t k) {
    if (k < cache_.size() && cache_[k] != 0.0) return cache_[k];
    if (k == 0) return 1.0;
    double q = beta_ * static_cast<double>(k);
    double acc = 0.0;
    for (double x : draws_) acc += std::pow(x, q);
    double m = acc / static_cast<double>(draws_.size());
    if (k >= cache_.size()) cache_.resize(k + 1, 0.0);
    cache_[k] = m;
    return m;
}

}  // namespace tstfnbp
