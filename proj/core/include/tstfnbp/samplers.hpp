// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "tstfnbp/params.hpp"
#include "tstfnbp/rng.hpp"
#include "tstfnbp/sample_path.hpp"

namespace tstfnbp {

/// One draw of the standard one-sided stable subordinator S_alpha(1),
/// E[exp(-u S)] = exp(-u^alpha).  Kanter's representation.
double sample_stable_unit(double alpha, RngStream& rng);

/// Gamma(shape = beta1*dt, rate = lambda1) increment.
double sample_gamma_increment(double lambda1, double beta1, double dt, RngStream& rng);

/// Tempered stable increment S_{alpha,mu}(dt) by exponential-tilting
/// rejection; dt is subdivided so each proposal batch keeps mu^alpha*sub <= 1.
/// Throws RejectionBudgetError after 10^6 proposals.
double sample_tempered_stable_increment(double alpha, double mu, double dt, RngStream& rng);

/// Mittag-Leffler waiting time W with P(W > w) = E_{beta,1}(-lambda w^beta);
/// exact exponential for beta = 1 (two-uniform inverse formula).
double sample_ml_waiting_time(double beta, double lambda, RngStream& rng);

/// Fractional Poisson counts N_beta(t_i, lambda) along increasing eval_times,
/// from one accumulated renewal sequence.
std::vector<long> sample_fpp_counts(double beta, double lambda,
                                    const std::vector<double>& eval_times, RngStream& rng);

/// Tempered Mittag-Leffler subordinator path M(t_i) = S_{alpha,mu}(G(t_i)) on
/// the grid; the returned path is prefixed with (t=0, M=0).
SamplePath sample_tmllp_path(const ProcessParams& params,
                             const std::vector<double>& grid, RngStream& rng);

/// One draw of the inverse stable subordinator E_beta(t) via the
/// distributional identity E_beta(t) = (t / S_beta(1))^beta.
double sample_inverse_stable(double beta, double t, RngStream& rng);

/// Composite counting path Q(t_i) = N_beta(M(t_i), lambda): one subordinator
/// path, one independent FPP renewal sequence evaluated at the operational
/// times, so the joint multi-time law is correct.  Returns the counting path
/// prefixed with (0,0); if tmllp_out is non-null the subordinator path is
/// stored there as well.
SamplePath sample_tstfnbp_path(const ProcessParams& params,
                               const std::vector<double>& grid, RngStream& rng,
                               SamplePath* tmllp_out = nullptr);

}  // namespace tstfnbp
