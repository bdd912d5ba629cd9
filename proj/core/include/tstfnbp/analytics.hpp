// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "tstfnbp/common.hpp"
#include "tstfnbp/moments.hpp"
#include "tstfnbp/params.hpp"
#include "tstfnbp/rng.hpp"

namespace tstfnbp {

/// Probabilities over n = 0..n_max with a certified tail bound; the probs and
/// tail together account for the whole unit mass up to the declared series
/// tolerance.
struct PmfVector {
    double t = 0.0;
    std::vector<double> probs;
    double tail_bound = 0.0;
};

/// Pdf of the subordinator M(t) (series form); requires lambda1 > mu^alpha.
double tmllp_pdf(double x, double t, const ProcessParams& params,
                 const SeriesControl& ctrl = {});

/// Levy measure density pi(x) of M; requires lambda1 > mu^alpha.
double tmllp_levy_density(double x, const ProcessParams& params,
                          const SeriesControl& ctrl = {});

/// Pmf of the fractional Poisson process N_beta(t, lambda), evaluated through
/// the three-parameter Mittag-Leffler form.
double fpp_pmf(long n, double t, double lambda, double beta,
               const SeriesControl& ctrl = {});

/// Negative binomial pmf with size beta1*t and success odds lambda/lambda1
/// (the beta = 1, no-tempering reduction of the counting process).
double nb_pmf(long n, double t, double lambda, double lambda1, double beta1);

/// Pmf of the fractional negative binomial process (gamma-subordinated FPP),
/// via the generalized Wright function.
double fnbp_pmf(long n, double t, double lambda, double lambda1, double beta1,
                double beta, const SeriesControl& ctrl = {});

/// Pmf of the composite counting process Q(t) = N_beta(M(t), lambda).  The
/// subordinator power moments E[M(t)^{beta(n+k)}] come from the supplied
/// source (cached quadrature or one Monte Carlo batch).
double tstfnbp_pmf(long n, double t, const ProcessParams& params,
                   const SeriesControl& ctrl, MomentSource& moments);

/// Convenience overload with an internally constructed quadrature source.
double tstfnbp_pmf(long n, double t, const ProcessParams& params,
                   const SeriesControl& ctrl = {});

/// Pmf over n = 0..n_max, sharing one moment cache; tail_bound is the exact
/// complement max(0, 1 - sum) since total mass is 1.
PmfVector tstfnbp_pmf_vector(long n_max, double t, const ProcessParams& params,
                             const SeriesControl& ctrl, MomentSource& moments);

/// Mean q1 E[M(t)^beta] and variance
/// q1 E[M^beta] - q1^2 (E[M^beta])^2 + 2 c2 E[M^{2beta}] of Q(t).
double tstfnbp_mean(double t, const ProcessParams& params, MomentSource& moments);
double tstfnbp_mean(double t, const ProcessParams& params);
double tstfnbp_variance(double t, const ProcessParams& params, MomentSource& moments);
double tstfnbp_variance(double t, const ProcessParams& params);

/// Var[Q(t)] - E[Q(t)] = 2 c2 E[M^{2beta}] - q1^2 (E[M^beta])^2; strictly
/// positive for all valid parameters (overdispersion).
double dispersion_gap(double t, const ProcessParams& params, MomentSource& moments);
double dispersion_gap(double t, const ProcessParams& params);

/// Cov[Q(s), Q(t)] for 0 < s <= t.  Three closed-moment terms are evaluated
/// by quadrature; the incomplete-beta expectation term is Monte Carlo over
/// joint (M(s), M(t)) draws with a control variate of known mean.
MomentEstimate tstfnbp_covariance(double s, double t, const ProcessParams& params,
                                  RngStream& rng, std::size_t n_samples);

/// Corr[Q(s), Q(t)] = Cov / sqrt(Var[Q(s)] Var[Q(t)]); std_error is the
/// covariance error scaled by the analytic denominator.
MomentEstimate tstfnbp_correlation(double s, double t, const ProcessParams& params,
                                   RngStream& rng, std::size_t n_samples);

/// Laplace transform E[e^{-u Q(t)}] (u >= 0) and pgf E[u^{Q(t)}] (u in [0,1]),
/// via the power-moment series.
double tstfnbp_laplace(double u, double t, const ProcessParams& params,
                       const SeriesControl& ctrl, MomentSource& moments);
double tstfnbp_laplace(double u, double t, const ProcessParams& params,
                       const SeriesControl& ctrl = {});
double tstfnbp_pgf(double u, double t, const ProcessParams& params,
                   const SeriesControl& ctrl, MomentSource& moments);
double tstfnbp_pgf(double u, double t, const ProcessParams& params,
                   const SeriesControl& ctrl = {});

/// Levy measure D(k) of the beta = 1 process (compound-Poisson-like jump
/// weights on integer jump sizes k >= 1); requires lambda1 > mu^alpha.
double levy_measure_beta1(long k, const ProcessParams& params,
                          const SeriesControl& ctrl = {});

enum class FirstPassageMode { survival, cdf, density };

/// First-passage time T_k of level k: survival P(T_k > t) as the partial pmf
/// sum, cdf = 1 - survival, density = -d/dt survival by Richardson-extrapolated
/// central differences.  For density mode, *discretization_estimate (if
/// non-null) receives the extrapolation's error estimate.
double first_passage(long k, double t, const ProcessParams& params,
                     const SeriesControl& ctrl = {},
                     FirstPassageMode mode = FirstPassageMode::survival,
                     double* discretization_estimate = nullptr);

/// Weighted least-squares slope of log Corr[Q(s), Q(t)] against log t.
/// noise_exceeds_fit is set when the 95% half-width of the slope estimate
/// swamps the slope itself.
struct LrdEstimate {
    double slope = 0.0;
    double std_error = 0.0;
    bool noise_exceeds_fit = false;
};

LrdEstimate lrd_slope(double s, const std::vector<double>& t_grid,
                      const ProcessParams& params, RngStream& rng,
                      std::size_t n_samples);

}  // namespace tstfnbp
