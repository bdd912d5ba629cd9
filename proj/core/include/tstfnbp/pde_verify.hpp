// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "tstfnbp/common.hpp"
#include "tstfnbp/params.hpp"

namespace tstfnbp {

/// Point-wise comparison of the two sides of a governing equation.  The left
/// side is a finite-difference time derivative of the series evaluator; the
/// right side is built from quadrature over independent density
/// representations, so agreement cross-checks both code paths.
struct ResidualReport {
    double x = 0.0;  // state coordinate (x for densities, n for the pmf)
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    // Richardson error estimate of the finite-difference side.
    double discretization_estimate = 0.0;
};

/// Density of the one-sided stable subordinator S_alpha(t) (Laplace exponent
/// u^alpha), evaluated through the Zolotarev single-integral representation;
/// requires 0 < alpha < 1, x > 0, t > 0.
double stable_density(double alpha, double x, double t, const QuadControl& quad = {});

/// P(S_alpha(t) <= x) through the companion integral representation.
double stable_cdf(double alpha, double x, double t, const QuadControl& quad = {});

/// Density of the tempered stable subordinator: the exact exponential tilt
/// exp(-mu x + mu^alpha t) of the stable density.
double tempered_stable_density(double alpha, double mu, double x, double t,
                               const QuadControl& quad = {});

/// Subordinator pdf by quadrature: int_0^inf g_{alpha,mu}(x, y) f_G(y, t) dy
/// over the tempered stable density and the gamma time-change density.  An
/// independent route to the same quantity as the tmllp_pdf series.
double tmllp_pdf_quadrature(double x, double t, const ProcessParams& params,
                            const QuadControl& quad = {});

/// Governing equation of the gamma density f_G(x, t):
///   df/dt = beta1 (log lambda1 + log x - psi(beta1 t)) f.
/// step = 0 picks an automatic finite-difference step.
ResidualReport gamma_pde_residual(double x, double t, const ProcessParams& params,
                                  double step = 0.0);

/// Governing equation of the subordinator density f_M(x, t):
///   df/dt = beta1 [(log lambda1 - psi(beta1 t)) f
///                  + int g_{alpha,mu}(x, y) log(y) f_G(y, t) dy].
ResidualReport tmllp_pde_residual(double x, double t, const ProcessParams& params,
                                  const QuadControl& quad = {}, double step = 0.0);

/// Governing equation of the counting pmf p(n, t):
///   (1/beta1) dp/dt = (log lambda1 - psi(beta1 t)) p
///                     + int h_n(y) log(y) f_G(y, t) dy,
/// where h_n(y) = E[p_beta(n | S(y))] averages the fractional Poisson pmf over
/// the tempered stable marginal.  Both right-side terms are pure quadrature;
/// the left side differentiates the moment-series pmf.
ResidualReport tstfnbp_pde_residual(long n, double t, const ProcessParams& params,
                                    const QuadControl& quad = {}, double step = 0.0);

}  // namespace tstfnbp
