// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "tstfnbp/common.hpp"

namespace tstfnbp {

/// The five-parameter family driving every process in the library, plus the
/// Poisson intensity.  Single source of truth for parameter constraints.
struct ProcessParams {
    double alpha;    // tempering-stability index, in (0,1)
    double beta;     // time-fractional index of the counting process, in (0,1]
    double beta1;    // gamma subordinator shape rate, > 0
    double lambda1;  // gamma subordinator rate, > 0
    double mu;       // tempering parameter, >= 0
    double lambda;   // Poisson intensity, > 0

    void validate() const {
        if (!(alpha > 0 && alpha < 1))
            throw ConstraintError("ProcessParams: alpha must lie in (0,1)");
        if (!(beta > 0 && beta <= 1))
            throw ConstraintError("ProcessParams: beta must lie in (0,1]");
        if (!(beta1 > 0)) throw ConstraintError("ProcessParams: beta1 must be positive");
        if (!(lambda1 > 0)) throw ConstraintError("ProcessParams: lambda1 must be positive");
        if (!(mu >= 0)) throw ConstraintError("ProcessParams: mu must be non-negative");
        if (!(lambda > 0)) throw ConstraintError("ProcessParams: lambda must be positive");
    }

    /// Stricter condition required by the subordinator pdf series and the
    /// Levy density: lambda1 > mu^alpha.
    bool pdf_constraint_met() const { return lambda1 > std::pow(mu, alpha); }

    void require_pdf_constraint() const {
        if (!pdf_constraint_met())
            throw ConstraintError("ProcessParams: lambda1 > mu^alpha required for pdf/Levy evaluation");
    }
};

}  // namespace tstfnbp
