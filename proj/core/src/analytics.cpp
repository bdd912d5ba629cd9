// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include "tstfnbp/analytics.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "tstfnbp/double_double.hpp"
#include "tstfnbp/pde_verify.hpp"
#include "tstfnbp/samplers.hpp"
#include "tstfnbp/special_functions.hpp"

namespace tstfnbp {

namespace {

// Alternating-series cancellation policy: double-double accumulation
// throughout; declared failure once the largest term exceeds the sum by 1e12.
// (Each term already carries ~1e-15 relative error from lgamma/exp, so the
// achievable accuracy degrades with that ratio no matter how wide the
// accumulator is.)
constexpr double kCancellationBudget = 1e12;

// Sums sign * exp(log_term(k)) for k = 0.. until two consecutive terms fall
// below tolerance while the magnitudes are decreasing.  log_term returns the
// log magnitude and sets sign to +/-1.  max_abs_out (if non-null) receives
// the largest term magnitude so callers can judge the realized cancellation.
double sum_signed_series(const std::function<double(std::size_t, int&)>& log_term,
                         const SeriesControl& ctrl, const std::string& what,
                         double budget = kCancellationBudget,
                         double* max_abs_out = nullptr) {
    ctrl.validate();
    DoubleDouble acc;
    double max_abs = 0.0;
    double prev_abs = std::numeric_limits<double>::infinity();
    std::size_t small_run = 0;
    for (std::size_t k = 0; k < ctrl.max_terms; ++k) {
        int sign = 1;
        double lt = log_term(k, sign);
        if (lt > 700.0)
            throw CancellationError(what + ": series term exceeds double range");
        double mag = std::exp(lt);
        acc += sign > 0 ? mag : -mag;
        max_abs = std::max(max_abs, mag);
        bool decreasing = mag <= prev_abs;
        // The absolute tolerance branch is scaled by the peak term when the
        // peak sits below one, so sums far beneath abs_tol are not truncated
        // while the remaining tail still dwarfs them.
        bool small = mag <= ctrl.rel_tol * std::fabs(acc.value()) ||
                     mag <= ctrl.abs_tol * std::min(1.0, max_abs);
        if (decreasing && small)
            ++small_run;
        else
            small_run = 0;
        if (small_run >= 2) {
            double sum = acc.value();
            if (max_abs_out) *max_abs_out = max_abs;
            double denom = std::max(std::fabs(sum), std::numeric_limits<double>::min());
            if (max_abs / denom > budget)
                throw CancellationError(what + ": cancellation exceeds precision budget");
            return sum;
        }
        prev_abs = mag;
    }
    throw TruncationError(what + ": series did not converge within max_terms");
}

double clamp_probability(double p) {
    if (p < 0.0 && p > -1e-10) return 0.0;
    return std::min(p, 1.0);
}

double lg(double x) { return std::lgamma(x); }

// Shared constants of the counting-process moment formulas.
struct CountingConstants {
    double q1;  // lambda / Gamma(1+beta)
    double c1;  // beta q1^2 B(beta, 1+beta)
    double c2;  // lambda^2 / Gamma(2 beta + 1)
};

CountingConstants counting_constants(const ProcessParams& p) {
    CountingConstants c{};
    c.q1 = p.lambda / std::tgamma(1.0 + p.beta);
    c.c1 = p.beta * c.q1 * c.q1 * beta_fn(p.beta, 1.0 + p.beta);
    c.c2 = p.lambda * p.lambda / std::tgamma(2.0 * p.beta + 1.0);
    return c;
}

}  // namespace

double tmllp_pdf(double x, double t, const ProcessParams& params,
                 const SeriesControl& ctrl) {
    params.validate();
    params.require_pdf_constraint();
    if (!(x > 0)) throw std::domain_error("tmllp_pdf: x must be positive");
    if (!(t > 0)) throw std::domain_error("tmllp_pdf: t must be positive");
    const double a = params.alpha;
    const double bt = params.beta1 * t;
    const double d = params.lambda1 - std::pow(params.mu, a);
    const double log_d = std::log(d);
    const double log_x = std::log(x);
    const double pref = bt * std::log(params.lambda1) - params.mu * x - lg(bt);
    auto log_term = [&](std::size_t k, int& sign) {
        sign = (k % 2 == 0) ? 1 : -1;
        double kk = static_cast<double>(k);
        return pref + kk * log_d + lg(bt + kk) - lg(kk + 1.0) +
               (a * (bt + kk) - 1.0) * log_x - lg(a * (bt + kk));
    };
    // The series cancellation grows roughly like e^{c x}; once the largest
    // term noise would erode the result below ~8 accurate digits, switch to
    // the subordination integral over the tempered stable density instead.
    double max_abs = 0.0;
    try {
        double v = sum_signed_series(log_term, ctrl, "tmllp_pdf", kCancellationBudget,
                                     &max_abs);
        if (max_abs * 5e-15 <= 1e-8 * std::max(std::fabs(v), 1e-300))
            return (v < 0.0 && v > -1e-12) ? 0.0 : v;
    } catch (const CancellationError&) {
        // fall through to quadrature
    } catch (const TruncationError&) {
        // the term peak moves out like x^{1/...}; far enough into the tail the
        // series also outruns max_terms, and the integral route takes over
    }
    return tmllp_pdf_quadrature(x, t, params);
}

double tmllp_levy_density(double x, const ProcessParams& params,
                          const SeriesControl& ctrl) {
    params.validate();
    params.require_pdf_constraint();
    if (!(x > 0)) throw std::domain_error("tmllp_levy_density: x must be positive");
    const double a = params.alpha;
    double z = (std::pow(params.mu, a) - params.lambda1) * std::pow(x, a);
    double ml = mittag_leffler(a, 1.0, z, ctrl);
    return params.alpha * params.beta1 / x * std::exp(-params.mu * x) * ml;
}

double fpp_pmf(long n, double t, double lambda, double beta,
               const SeriesControl& ctrl) {
    if (n < 0) throw std::domain_error("fpp_pmf: n must be non-negative");
    if (!(lambda > 0)) throw std::domain_error("fpp_pmf: lambda must be positive");
    if (!(beta > 0 && beta <= 1)) throw std::domain_error("fpp_pmf: beta must lie in (0,1]");
    if (t < 0) throw std::domain_error("fpp_pmf: t must be non-negative");
    if (t == 0.0) return n == 0 ? 1.0 : 0.0;
    double nn = static_cast<double>(n);
    if (beta == 1.0)
        return std::exp(nn * std::log(lambda * t) - lambda * t - lg(nn + 1.0));
    double z = lambda * std::pow(t, beta);
    try {
        double p = prabhakar_ml(beta, beta * nn + 1.0, nn + 1.0, -z, ctrl);
        return clamp_probability(std::exp(nn * std::log(z)) * p);
    } catch (const CancellationError&) {
        // large lambda t^beta: fall through
    } catch (const TruncationError&) {
        // fall through
    }
    // Subordination fallback: average the Poisson pmf over the inverse
    // beta-stable time density f_E(u, t) = (t/beta) u^{-1-1/beta} g_beta(t u^{-1/beta}).
    QuadControl density_quad{1e-9, 15};
    auto f = [&](double u) {
        double w = t * std::pow(u, -1.0 / beta);
        if (!(w > 0) || !std::isfinite(w)) return 0.0;
        double g = stable_density(beta, w, 1.0, density_quad);
        if (g <= 0) return 0.0;
        double lp = (n > 0 ? nn * std::log(lambda * u) : 0.0) - lambda * u -
                    lg(nn + 1.0) + std::log(t / beta) -
                    (1.0 + 1.0 / beta) * std::log(u) + std::log(g);
        return lp < -745.0 ? 0.0 : std::exp(lp);
    };
    // Instance reuse keeps the abscissa tables warm; this path can sit inside
    // other quadratures, which all use their own instances.
    static thread_local boost::math::quadrature::exp_sinh<double> integ;
    double v = integ.integrate(f, 1e-9);
    if (!std::isfinite(v)) throw QuadratureError("fpp_pmf: fallback quadrature failed");
    return clamp_probability(v);
}

double nb_pmf(long n, double t, double lambda, double lambda1, double beta1) {
    if (n < 0) throw std::domain_error("nb_pmf: n must be non-negative");
    if (!(t > 0) || !(lambda > 0) || !(lambda1 > 0) || !(beta1 > 0))
        throw std::domain_error("nb_pmf: t, lambda, lambda1, beta1 must be positive");
    double size = beta1 * t;
    double nn = static_cast<double>(n);
    double log_p = lg(nn + size) - lg(size) - lg(nn + 1.0) +
                   size * (std::log(lambda1) - std::log(lambda1 + lambda)) +
                   nn * (std::log(lambda) - std::log(lambda1 + lambda));
    return std::exp(log_p);
}

double fnbp_pmf(long n, double t, double lambda, double lambda1, double beta1,
                double beta, const SeriesControl& ctrl) {
    if (n < 0) throw std::domain_error("fnbp_pmf: n must be non-negative");
    if (!(t > 0) || !(lambda > 0) || !(lambda1 > 0) || !(beta1 > 0))
        throw std::domain_error("fnbp_pmf: t, lambda, lambda1, beta1 must be positive");
    if (!(beta > 0 && beta <= 1)) throw std::domain_error("fnbp_pmf: beta must lie in (0,1]");
    double nn = static_cast<double>(n);
    std::vector<WrightPair> upper = {{nn + 1.0, 1.0}, {beta1 * t + beta * nn, beta}};
    std::vector<WrightPair> lower = {{1.0 + beta * nn, beta}};
    double z = -lambda * std::pow(lambda1, -beta);
    double w = generalized_wright(upper, lower, z, ctrl);
    double log_pref = nn * std::log(lambda) - beta * nn * std::log(lambda1) -
                      lg(nn + 1.0) - lg(beta1 * t);
    return clamp_probability(std::exp(log_pref) * w);
}

double tstfnbp_pmf(long n, double t, const ProcessParams& params,
                   const SeriesControl& ctrl, MomentSource& moments) {
    params.validate();
    params.require_pdf_constraint();
    if (n < 0) throw std::domain_error("tstfnbp_pmf: n must be non-negative");
    if (!(t > 0)) throw std::domain_error("tstfnbp_pmf: t must be positive");
    const double nn = static_cast<double>(n);
    const double log_lam = std::log(params.lambda);
    const double pref = nn * log_lam - lg(nn + 1.0);
    auto log_term = [&](std::size_t k, int& sign) {
        sign = (k % 2 == 0) ? 1 : -1;
        double kk = static_cast<double>(k);
        double m = moments.beta_power_moment(static_cast<std::size_t>(n) + k);
        if (!(m > 0) || !std::isfinite(m))
            throw QuadratureError("tstfnbp_pmf: invalid subordinator power moment");
        return pref + lg(nn + kk + 1.0) - lg(kk + 1.0) + kk * log_lam -
               lg(params.beta * (nn + kk) + 1.0) + std::log(m);
    };
    return clamp_probability(sum_signed_series(log_term, ctrl, "tstfnbp_pmf"));
}

double tstfnbp_pmf(long n, double t, const ProcessParams& params,
                   const SeriesControl& ctrl) {
    QuadratureMomentSource src(t, params);
    return tstfnbp_pmf(n, t, params, ctrl, src);
}

PmfVector tstfnbp_pmf_vector(long n_max, double t, const ProcessParams& params,
                             const SeriesControl& ctrl, MomentSource& moments) {
    if (n_max < 0) throw std::domain_error("tstfnbp_pmf_vector: n_max must be non-negative");
    PmfVector out;
    out.t = t;
    out.probs.reserve(static_cast<std::size_t>(n_max) + 1);
    double total = 0.0;
    for (long n = 0; n <= n_max; ++n) {
        double p = tstfnbp_pmf(n, t, params, ctrl, moments);
        out.probs.push_back(p);
        total += p;
    }
    // Total mass is exactly 1, so the tail is the complement of the partial sum.
    out.tail_bound = std::max(0.0, 1.0 - total);
    return out;
}

double tstfnbp_mean(double t, const ProcessParams& params, MomentSource& moments) {
    params.validate();
    return counting_constants(params).q1 * moments.beta_power_moment(1);
}

double tstfnbp_mean(double t, const ProcessParams& params) {
    QuadratureMomentSource src(t, params);
    return tstfnbp_mean(t, params, src);
}

double tstfnbp_variance(double t, const ProcessParams& params, MomentSource& moments) {
    params.validate();
    auto c = counting_constants(params);
    double m1 = moments.beta_power_moment(1);
    double m2 = moments.beta_power_moment(2);
    return c.q1 * m1 - c.q1 * c.q1 * m1 * m1 + 2.0 * c.c2 * m2;
}

double tstfnbp_variance(double t, const ProcessParams& params) {
    QuadratureMomentSource src(t, params);
    return tstfnbp_variance(t, params, src);
}

double dispersion_gap(double t, const ProcessParams& params, MomentSource& moments) {
    (void)t;  // the time dependence enters through the moment source
    params.validate();
    auto c = counting_constants(params);
    double m1 = moments.beta_power_moment(1);
    double m2 = moments.beta_power_moment(2);
    return 2.0 * c.c2 * m2 - c.q1 * c.q1 * m1 * m1;
}

double dispersion_gap(double t, const ProcessParams& params) {
    QuadratureMomentSource src(t, params);
    return dispersion_gap(t, params, src);
}

namespace {

// Accumulates the Monte Carlo estimate of the incomplete-beta covariance term
//   X = q1^2 beta M_t^{2 beta} B(beta, 1+beta; M_s / M_t)
// with the control variate Y = q1^2 M_s^beta m_t (m_t = E[M_t^beta] analytic),
// whose mean q1^2 m_s m_t is known.  Returns the control-variate-adjusted
// estimate of E[X].
struct BetaTermAccumulator {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    std::size_t n = 0;

    void add(double x, double y) {
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
        ++n;
    }

    void estimate(double ey, double& mean, double& std_error) const {
        double dn = static_cast<double>(n);
        double mx = sx / dn, my = sy / dn;
        double vx = std::max(sxx / dn - mx * mx, 0.0);
        double vy = std::max(syy / dn - my * my, 0.0);
        double cxy = sxy / dn - mx * my;
        double c = vy > 0 ? cxy / vy : 0.0;
        mean = mx - c * (my - ey);
        double vz = std::max(vx - (vy > 0 ? cxy * cxy / vy : 0.0), 0.0);
        std_error = std::sqrt(vz / dn);
    }
};

double beta_term_draw(double ms, double mt, const ProcessParams& p, double q1) {
    double ratio = std::min(ms / mt, 1.0);
    return q1 * q1 * p.beta * std::pow(mt, 2.0 * p.beta) *
           incomplete_beta(p.beta, 1.0 + p.beta, ratio);
}

}  // namespace

MomentEstimate tstfnbp_covariance(double s, double t, const ProcessParams& params,
                                  RngStream& rng, std::size_t n_samples) {
    params.validate();
    if (!(s > 0) || !(t >= s))
        throw std::domain_error("tstfnbp_covariance: require 0 < s <= t");
    if (n_samples == 0)
        throw std::invalid_argument("tstfnbp_covariance: n_samples must be positive");
    auto c = counting_constants(params);
    double ms_b = tmllp_fractional_moment(params.beta, s, params);
    double ms_2b = tmllp_fractional_moment(2.0 * params.beta, s, params);
    double mt_b = (t == s) ? ms_b : tmllp_fractional_moment(params.beta, t, params);
    double det = c.q1 * ms_b + c.c1 * ms_2b - c.q1 * c.q1 * ms_b * mt_b;

    BetaTermAccumulator acc;
    for (std::size_t i = 0; i < n_samples; ++i) {
        double g = sample_gamma_increment(params.lambda1, params.beta1, s, rng);
        double ms = sample_tempered_stable_increment(params.alpha, params.mu, g, rng);
        double mt = ms;
        if (t > s) {
            double g2 = sample_gamma_increment(params.lambda1, params.beta1, t - s, rng);
            mt += sample_tempered_stable_increment(params.alpha, params.mu, g2, rng);
        }
        double x = beta_term_draw(ms, mt, params, c.q1);
        double y = c.q1 * c.q1 * std::pow(ms, params.beta) * mt_b;
        acc.add(x, y);
    }
    double mean, se;
    acc.estimate(c.q1 * c.q1 * ms_b * mt_b, mean, se);
    return MomentEstimate{det + mean, se, n_samples};
}

MomentEstimate tstfnbp_correlation(double s, double t, const ProcessParams& params,
                                   RngStream& rng, std::size_t n_samples) {
    MomentEstimate cov = tstfnbp_covariance(s, t, params, rng, n_samples);
    double vs = tstfnbp_variance(s, params);
    double vt = (t == s) ? vs : tstfnbp_variance(t, params);
    double denom = std::sqrt(vs * vt);
    double corr = cov.value / denom;
    corr = std::clamp(corr, -1.0, 1.0);
    return MomentEstimate{corr, cov.std_error / denom, n_samples};
}

namespace {

double tstfnbp_moment_series(double x, double t, const ProcessParams& params,
                             const SeriesControl& ctrl, MomentSource& moments,
                             const std::string& what) {
    (void)t;  // the time dependence enters through the moment source
    if (x == 0.0) return 1.0;
    const double log_x = std::log(x);
    auto log_term = [&](std::size_t l, int& sign) {
        sign = (l % 2 == 0) ? 1 : -1;
        double ll = static_cast<double>(l);
        double m = moments.beta_power_moment(l);
        if (!(m > 0) || !std::isfinite(m))
            throw QuadratureError(what + ": invalid subordinator power moment");
        return ll * log_x + std::log(m) - lg(1.0 + params.beta * ll);
    };
    return sum_signed_series(log_term, ctrl, what);
}

}  // namespace

double tstfnbp_laplace(double u, double t, const ProcessParams& params,
                       const SeriesControl& ctrl, MomentSource& moments) {
    params.validate();
    if (u < 0) throw std::domain_error("tstfnbp_laplace: u must be non-negative");
    return tstfnbp_moment_series(params.lambda * (1.0 - std::exp(-u)), t, params, ctrl,
                                 moments, "tstfnbp_laplace");
}

double tstfnbp_laplace(double u, double t, const ProcessParams& params,
                       const SeriesControl& ctrl) {
    QuadratureMomentSource src(t, params);
    return tstfnbp_laplace(u, t, params, ctrl, src);
}

double tstfnbp_pgf(double u, double t, const ProcessParams& params,
                   const SeriesControl& ctrl, MomentSource& moments) {
    params.validate();
    if (u < 0 || u > 1) throw std::domain_error("tstfnbp_pgf: u must lie in [0,1]");
    return tstfnbp_moment_series(params.lambda * (1.0 - u), t, params, ctrl, moments,
                                 "tstfnbp_pgf");
}

double tstfnbp_pgf(double u, double t, const ProcessParams& params,
                   const SeriesControl& ctrl) {
    QuadratureMomentSource src(t, params);
    return tstfnbp_pgf(u, t, params, ctrl, src);
}

double levy_measure_beta1(long k, const ProcessParams& params,
                          const SeriesControl& ctrl) {
    params.validate();
    params.require_pdf_constraint();
    if (params.beta != 1.0)
        throw ConstraintError("levy_measure_beta1: defined only for beta = 1");
    if (k < 1) throw std::domain_error("levy_measure_beta1: k must be >= 1");
    const double a = params.alpha;
    const double d = params.lambda1 - std::pow(params.mu, a);
    const double log_d = std::log(d);
    const double log_rate = std::log(params.lambda + params.mu);
    const double kk = static_cast<double>(k);
    const double pref = std::log(a * params.beta1) + kk * std::log(params.lambda) -
                        lg(kk + 1.0);
    auto log_term = [&](std::size_t j, int& sign) {
        sign = (j % 2 == 0) ? 1 : -1;
        double jj = static_cast<double>(j);
        return pref + jj * log_d + lg(a * jj + kk) - lg(a * jj + 1.0) -
               (a * jj + kk) * log_rate;
    };
    double v = sum_signed_series(log_term, ctrl, "levy_measure_beta1");
    return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

namespace {

double first_passage_survival(long k, double t, const ProcessParams& params,
                              const SeriesControl& ctrl) {
    QuadratureMomentSource src(t, params);
    double s = 0.0;
    for (long n = 0; n < k; ++n) s += tstfnbp_pmf(n, t, params, ctrl, src);
    return std::clamp(s, 0.0, 1.0);
}

}  // namespace

double first_passage(long k, double t, const ProcessParams& params,
                     const SeriesControl& ctrl, FirstPassageMode mode,
                     double* discretization_estimate) {
    params.validate();
    params.require_pdf_constraint();
    if (k < 1) throw std::domain_error("first_passage: k must be >= 1");
    if (!(t > 0)) throw std::domain_error("first_passage: t must be positive");
    if (mode == FirstPassageMode::survival)
        return first_passage_survival(k, t, params, ctrl);
    if (mode == FirstPassageMode::cdf)
        return 1.0 - first_passage_survival(k, t, params, ctrl);

    // density = -dS/dt, central differences Richardson-extrapolated once
    double h = std::min(std::max(1e-4, 1e-3 * t), 0.45 * t);
    auto slope = [&](double step) {
        return (first_passage_survival(k, t + step, params, ctrl) -
                first_passage_survival(k, t - step, params, ctrl)) /
               (2.0 * step);
    };
    double d1 = slope(h);
    double d2 = slope(0.5 * h);
    double rich = (4.0 * d2 - d1) / 3.0;
    if (discretization_estimate) *discretization_estimate = std::fabs(d2 - d1) / 3.0;
    return -rich;
}

LrdEstimate lrd_slope(double s, const std::vector<double>& t_grid,
                      const ProcessParams& params, RngStream& rng,
                      std::size_t n_samples) {
    params.validate();
    if (!(s > 0)) throw std::domain_error("lrd_slope: s must be positive");
    if (n_samples == 0) throw std::invalid_argument("lrd_slope: n_samples must be positive");
    std::vector<double> grid = t_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.size() < 2) throw std::invalid_argument("lrd_slope: need at least two grid times");
    if (grid.front() <= s) throw std::invalid_argument("lrd_slope: grid times must exceed s");

    auto c = counting_constants(params);
    double ms_b = tmllp_fractional_moment(params.beta, s, params);
    double ms_2b = tmllp_fractional_moment(2.0 * params.beta, s, params);
    double var_s = tstfnbp_variance(s, params);

    const std::size_t jn = grid.size();
    std::vector<double> mt_b(jn), var_t(jn), det(jn);
    for (std::size_t j = 0; j < jn; ++j) {
        QuadratureMomentSource src(grid[j], params);
        mt_b[j] = src.beta_power_moment(1);
        var_t[j] = tstfnbp_variance(grid[j], params, src);
        det[j] = c.q1 * ms_b + c.c1 * ms_2b - c.q1 * c.q1 * ms_b * mt_b[j];
    }

    // One shared joint ensemble: each path carries M(s) and M(t_j) for all j.
    std::vector<BetaTermAccumulator> acc(jn);
    for (std::size_t i = 0; i < n_samples; ++i) {
        double g = sample_gamma_increment(params.lambda1, params.beta1, s, rng);
        double m = sample_tempered_stable_increment(params.alpha, params.mu, g, rng);
        double ms = m;
        double msb = std::pow(ms, params.beta);
        double prev = s;
        for (std::size_t j = 0; j < jn; ++j) {
            double g2 = sample_gamma_increment(params.lambda1, params.beta1,
                                               grid[j] - prev, rng);
            m += sample_tempered_stable_increment(params.alpha, params.mu, g2, rng);
            prev = grid[j];
            acc[j].add(beta_term_draw(ms, m, params, c.q1),
                       c.q1 * c.q1 * msb * mt_b[j]);
        }
    }

    // Weighted least squares of log corr against log t.
    std::vector<double> lx, ly, w;
    bool skipped = false;
    for (std::size_t j = 0; j < jn; ++j) {
        double mean, se;
        acc[j].estimate(c.q1 * c.q1 * ms_b * mt_b[j], mean, se);
        double denom = std::sqrt(var_s * var_t[j]);
        double corr = (det[j] + mean) / denom;
        double corr_se = se / denom;
        if (!(corr > 0)) {
            skipped = true;
            continue;
        }
        lx.push_back(std::log(grid[j]));
        ly.push_back(std::log(corr));
        double se_log = std::max(corr_se / corr, 1e-12);
        w.push_back(1.0 / (se_log * se_log));
    }
    LrdEstimate out;
    if (lx.size() < 2) {
        out.noise_exceeds_fit = true;
        out.std_error = std::numeric_limits<double>::infinity();
        return out;
    }
    double sw = 0, swx = 0, swy = 0;
    for (std::size_t j = 0; j < lx.size(); ++j) {
        sw += w[j];
        swx += w[j] * lx[j];
        swy += w[j] * ly[j];
    }
    double xbar = swx / sw, ybar = swy / sw;
    double sxx = 0, sxy = 0;
    for (std::size_t j = 0; j < lx.size(); ++j) {
        double dx = lx[j] - xbar;
        sxx += w[j] * dx * dx;
        sxy += w[j] * dx * (ly[j] - ybar);
    }
    out.slope = sxy / sxx;
    out.std_error = std::sqrt(1.0 / sxx);
    out.noise_exceeds_fit = skipped || 1.96 * out.std_error > std::fabs(out.slope);
    return out;
}

}  // namespace tstfnbp
