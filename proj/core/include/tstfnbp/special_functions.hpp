// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "tstfnbp/common.hpp"

namespace tstfnbp {

/// log|Gamma(x)| together with the sign of Gamma(x).
/// Throws PoleError when x is a non-positive integer.
double log_abs_gamma(double x, int& sign);

/// Gamma(x); throws PoleError at non-positive integers.
double gamma_fn(double x);

/// Digamma psi(x).
double digamma(double x);

/// log of the rising factorial (rho)_k, rho > 0.  Computed in log space so
/// that k in the hundreds does not overflow.
double log_rising_factorial(double rho, unsigned long k);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z), alpha,beta > 0.
///
/// For z < 0 with alpha in (0,1) the naive alternating series is
/// catastrophically cancelling once |z| is large; in that regime the value
/// is computed from the real-line integral representation instead.  The
/// switch is driven by an a-priori cancellation estimate (largest-term
/// magnitude vs. expected sum).
double mittag_leffler(double alpha, double beta, double z, const SeriesControl& ctrl);

/// Three-parameter (Prabhakar) Mittag-Leffler function
/// E^rho_{alpha,beta}(z) = sum_k (rho)_k z^k / (k! Gamma(alpha k + beta)).
double prabhakar_ml(double alpha, double beta, double rho, double z,
                    const SeriesControl& ctrl);

/// One (coefficient, multiplier) pair of a generalized Wright series row.
struct WrightPair {
    double a;  // additive part of the gamma argument
    double b;  // per-term multiplier of k
};

/// Generalized Wright function
///   p_psi_q(z) = sum_k z^k/k! * prod_i Gamma(a_i + b_i k) / prod_j Gamma(c_j + d_j k).
/// Lower-row multipliers must be positive; a gamma argument hitting a
/// non-positive integer in the upper row raises PoleError.
double generalized_wright(const std::vector<WrightPair>& upper,
                          const std::vector<WrightPair>& lower, double z,
                          const SeriesControl& ctrl);

/// Unregularized incomplete beta function B(m,n;x) = int_0^x t^{m-1}(1-t)^{n-1} dt.
double incomplete_beta(double m, double n, double x);

/// Complete beta function B(m,n).
double beta_fn(double m, double n);

/// Partial ordinary Bell polynomial B^hat_{(j,i)}(a_1, ..., a_{j-i+1}),
/// summed over compositions of j into i ordered positive parts.
/// coeffs[0] is a_1.
double partial_bell_ordinary(const std::vector<double>& coeffs, int j, int i);

}  // namespace tstfnbp
