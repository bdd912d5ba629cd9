// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "tstfnbp/common.hpp"
#include "tstfnbp/params.hpp"
#include "tstfnbp/rng.hpp"

namespace tstfnbp {

/// Monte Carlo value with its standard error; the unit of every
/// sampler-vs-formula comparison.
struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
};

/// Closed-form Laplace transform of the subordinator M(t),
/// (lambda1 / (lambda1 - mu^alpha + (mu+u)^alpha))^{beta1 t}.
double tmllp_laplace(double u, double t, const ProcessParams& params);

/// n-th derivative of the Laplace transform at u (>0 when mu = 0), computed
/// by truncated-Taylor (jet) arithmetic, exact up to rounding.
double tmllp_laplace_derivative(double u, double t, const ProcessParams& params, unsigned n);

/// E[M(t)^q] for q >= 0.  Integer q uses exact transform derivatives at 0;
/// non-integer q uses adaptive quadrature of the Mellin-type identity
/// E[M^q] = (-1)^n / Gamma(n-q) * int_0^inf u^{n-q-1} LT^{(n)}(u) du,
/// n = ceil(q).
double tmllp_fractional_moment(double q, double t, const ProcessParams& params,
                               const QuadControl& quad = {});

/// Hand-derived closed forms for the first four integer moments, kept as
/// independent anchors for the jet/quadrature route.
double tmllp_integer_moment_closed(unsigned n, double t, const ProcessParams& params);

/// Leading-order growth (alpha beta1 mu^{alpha-1} / lambda1)^q t^q; requires mu > 0.
double tmllp_moment_asymptote(double q, double t, const ProcessParams& params);

/// Source of E[M(t)^{beta k}] for the pmf/transform series; either cached
/// quadrature or a single Monte Carlo batch of M(t) draws.
class MomentSource {
public:
    virtual ~MomentSource() = default;
    /// E[M(t)^{beta * k}]
    virtual double beta_power_moment(std::size_t k) = 0;
};

class QuadratureMomentSource final : public MomentSource {
public:
    QuadratureMomentSource(double t, const ProcessParams& params, QuadControl quad = {});
    double beta_power_moment(std::size_t k) override;

private:
    double t_;
    ProcessParams params_;
    QuadControl quad_;
    std::vector<double> cache_;
};

class MonteCarloMomentSource final : public MomentSource {
public:
    /// Draws n_samples values of M(t) up front; all requested powers reuse
    /// the same batch.
    MonteCarloMomentSource(double t, const ProcessParams& params, RngStream& rng,
                           std::size_t n_samples);
    double beta_power_moment(std::size_t k) override;
    const std::vector<double>& draws() const { return draws_; }

private:
    double beta_;
    std::vector<double> draws_;
    std::vector<double> cache_;
};

}  // namespace tstfnbp
