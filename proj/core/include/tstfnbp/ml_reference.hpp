// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tstfnbp {

/// Reference evaluation of the two-parameter Mittag-Leffler function
/// E_{alpha,beta}(z) by direct series summation in adaptive extended
/// precision (MPFR).  The working precision is chosen from the largest term
/// magnitude so that alternating cancellation at strongly negative z is fully
/// absorbed; the returned double is correctly rounded to ~1e-15 relative.
///
/// Intended for test oracles only: cost grows with |z|^(1/alpha) terms at
/// hundreds of digits.  alpha, beta > 0.
double mittag_leffler_reference(double alpha, double beta, double z);

/// Same adaptive-precision summation for the three-parameter (Prabhakar)
/// function E^rho_{alpha,beta}(z); rho > 0.
double prabhakar_ml_reference(double alpha, double beta, double rho, double z);

}  // namespace tstfnbp
