// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include "tstfnbp/samplers.hpp"

#include <algorithm>
#include <cmath>

namespace tstfnbp {

namespace {

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("grid must be non-empty");
    if (!(grid.front() > 0)) throw std::invalid_argument("grid must start above 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");
}

// Marsaglia-Tsang for shape >= 1; boosted by U^{1/shape} below 1.
double gamma_shape_unit_rate(double shape, RngStream& rng) {
    if (shape < 1.0) {
        double u = rng.uniform();
        return gamma_shape_unit_rate(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = rng.normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = rng.uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_stable_unit(double alpha, RngStream& rng) {
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("sample_stable_unit: alpha must lie in (0,1)");
    // Kanter: S = (a(theta)/W)^{(1-alpha)/alpha}, theta ~ U(0,pi), W ~ Exp(1),
    // a(theta) = sin(alpha theta)^{alpha/(1-alpha)} sin((1-alpha) theta)
    //            / sin(theta)^{1/(1-alpha)}.
    double theta = M_PI * rng.uniform();
    double w = rng.exponential();
    double oma = 1.0 - alpha;
    double log_a = (alpha / oma) * std::log(std::sin(alpha * theta)) +
                   std::log(std::sin(oma * theta)) -
                   (1.0 / oma) * std::log(std::sin(theta));
    return std::exp((oma / alpha) * (log_a - std::log(w)));
}

double sample_gamma_increment(double lambda1, double beta1, double dt, RngStream& rng) {
    if (!(lambda1 > 0) || !(beta1 > 0))
        throw std::domain_error("sample_gamma_increment: lambda1 and beta1 must be positive");
    if (!(dt > 0)) throw std::domain_error("sample_gamma_increment: dt must be positive");
    return gamma_shape_unit_rate(beta1 * dt, rng) / lambda1;
}

double sample_tempered_stable_increment(double alpha, double mu, double dt, RngStream& rng) {
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("sample_tempered_stable_increment: alpha must lie in (0,1)");
    if (!(mu >= 0)) throw std::domain_error("sample_tempered_stable_increment: mu must be >= 0");
    if (!(dt > 0)) throw std::domain_error("sample_tempered_stable_increment: dt must be positive");

    if (mu == 0.0) return std::pow(dt, 1.0 / alpha) * sample_stable_unit(alpha, rng);

    // Subdivide so the per-proposal acceptance rate exp(-mu^alpha * sub)
    // stays above exp(-1).
    double mua = std::pow(mu, alpha);
    auto n_sub = static_cast<std::size_t>(std::ceil(mua * dt));
    n_sub = std::max<std::size_t>(n_sub, 1);
    double sub = dt / static_cast<double>(n_sub);
    double sub_scale = std::pow(sub, 1.0 / alpha);

    constexpr std::size_t kBudget = 1000000;
    std::size_t proposals = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < n_sub; ++i) {
        for (;;) {
            if (++proposals > kBudget)
                throw RejectionBudgetError(
                    "sample_tempered_stable_increment: proposal budget exhausted");
            double x = sub_scale * sample_stable_unit(alpha, rng);
            if (rng.uniform() <= std::exp(-mu * x)) {
                total += x;
                break;
            }
        }
    }
    return total;
}

double sample_ml_waiting_time(double beta, double lambda, RngStream& rng) {
    if (!(beta > 0 && beta <= 1))
        throw std::domain_error("sample_ml_waiting_time: beta must lie in (0,1]");
    if (!(lambda > 0)) throw std::domain_error("sample_ml_waiting_time: lambda must be positive");
    double e = rng.exponential();
    if (beta == 1.0) return e / lambda;
    double v = rng.uniform();
    double factor = std::sin(beta * M_PI) / std::tan(beta * M_PI * v) - std::cos(beta * M_PI);
    return std::pow(lambda, -1.0 / beta) * e * std::pow(factor, 1.0 / beta);
}

std::vector<long> sample_fpp_counts(double beta, double lambda,
                                    const std::vector<double>& eval_times, RngStream& rng) {
    if (eval_times.empty()) return {};
    for (std::size_t i = 0; i < eval_times.size(); ++i) {
        if (eval_times[i] < 0 || (i > 0 && eval_times[i] < eval_times[i - 1]))
            throw std::invalid_argument("sample_fpp_counts: eval_times must be non-decreasing, >= 0");
    }
    std::vector<long> counts(eval_times.size(), 0);
    double clock = sample_ml_waiting_time(beta, lambda, rng);
    long n = 0;
    for (std::size_t i = 0; i < eval_times.size(); ++i) {
        while (clock <= eval_times[i]) {
            ++n;
            clock += sample_ml_waiting_time(beta, lambda, rng);
        }
        counts[i] = n;
    }
    return counts;
}

SamplePath sample_tmllp_path(const ProcessParams& params,
                             const std::vector<double>& grid, RngStream& rng) {
    params.validate();
    check_grid(grid);
    SamplePath path;
    path.times.reserve(grid.size() + 1);
    path.values.reserve(grid.size() + 1);
    path.times.push_back(0.0);
    path.values.push_back(0.0);
    double t_prev = 0.0;
    double m = 0.0;
    for (double t : grid) {
        double g = sample_gamma_increment(params.lambda1, params.beta1, t - t_prev, rng);
        m += sample_tempered_stable_increment(params.alpha, params.mu, g, rng);
        path.times.push_back(t);
        path.values.push_back(m);
        t_prev = t;
    }
    return path;
}

double sample_inverse_stable(double beta, double t, RngStream& rng) {
    if (!(beta > 0 && beta < 1))
        throw std::domain_error("sample_inverse_stable: beta must lie in (0,1)");
    if (!(t > 0)) throw std::domain_error("sample_inverse_stable: t must be positive");
    return std::pow(t / sample_stable_unit(beta, rng), beta);
}

SamplePath sample_tstfnbp_path(const ProcessParams& params,
                               const std::vector<double>& grid, RngStream& rng,
                               SamplePath* tmllp_out) {
    SamplePath m_path = sample_tmllp_path(params, grid, rng);

    // Operational times M(t_1) <= ... <= M(t_n): one renewal sequence
    // evaluated at these thresholds gives the correct joint law.
    std::vector<double> op_times(m_path.values.begin() + 1, m_path.values.end());
    std::vector<long> counts = sample_fpp_counts(params.beta, params.lambda, op_times, rng);

    SamplePath q;
    q.times.reserve(grid.size() + 1);
    q.values.reserve(grid.size() + 1);
    q.times.push_back(0.0);
    q.values.push_back(0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        q.times.push_back(grid[i]);
        q.values.push_back(static_cast<double>(counts[i]));
    }
    if (tmllp_out) *tmllp_out = std::move(m_path);
    return q;
}

}  // namespace tstfnbp
