// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include "tstfnbp/ml_reference.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tstfnbp {
namespace {

// Largest log-magnitude of a series term k*log|z| - lgamma(alpha*k + beta)
// (+ log rising factorial for the Prabhakar case), scanned in double
// precision; only used to size the working precision, so coarse is fine.
double peak_log_term(double alpha, double beta, double rho, double z) {
    double la = std::log(std::max(std::fabs(z), 1e-300));
    double peak = -std::lgamma(beta);
    double prev = peak;
    for (long k = 1; k < 2000000; ++k) {
        double lt = k * la + std::lgamma(rho + k) - std::lgamma(rho) -
                    std::lgamma(k + 1.0) - std::lgamma(alpha * k + beta);
        peak = std::max(peak, lt);
        if (lt < prev && lt < peak - 60.0) break;
        prev = lt;
    }
    return peak;
}

double sum_series(double alpha, double beta, double rho, double z) {
    if (!(alpha > 0) || !(beta > 0) || !(rho > 0))
        throw std::domain_error("mittag_leffler_reference: parameters must be positive");
    double peak = peak_log_term(alpha, beta, rho, z);
    // Enough bits to absorb the cancellation from the peak down to the result,
    // plus guard digits for the rounding of each term.
    mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(std::max(0.0, peak) / std::log(2.0)) + 256;

    mpfr_t sum, term, pow_z, rising, arg, g, zm, t1, am;
    mpfr_inits2(prec, sum, term, pow_z, rising, arg, g, zm, t1, am, (mpfr_ptr)nullptr);
    mpfr_set_d(zm, z, MPFR_RNDN);
    mpfr_set_d(am, alpha, MPFR_RNDN);
    // Gamma argument alpha*k + beta (+ j), formed at working precision: a
    // double-rounded argument would perturb Gamma by ~1e-13 relative at
    // k ~ hundreds, which the cancellation amplifies past the result size.
    auto set_arg = [&](long k, long j) {
        mpfr_mul_si(arg, am, k, MPFR_RNDN);
        mpfr_add_d(arg, arg, beta, MPFR_RNDN);
        if (j != 0) mpfr_add_si(arg, arg, j, MPFR_RNDN);
    };
    mpfr_set_d(sum, 0.0, MPFR_RNDN);
    mpfr_set_d(pow_z, 1.0, MPFR_RNDN);  // z^k / k!
    mpfr_set_d(rising, 1.0, MPFR_RNDN); // (rho)_k

    // When alpha*m is an integer for small m, Gamma(alpha k + beta) advances
    // from k to k+m by an integer shift, so m interleaved recurrence tracks
    // replace the per-term mpfr_gamma (which dominates the cost at high
    // precision).
    int stride = 0;
    for (int m = 1; m <= 8; ++m) {
        double a_m = alpha * m;
        if (std::fabs(a_m - std::round(a_m)) < 1e-12 * m) {
            stride = m;
            break;
        }
    }
    std::vector<mpfr_t> track(stride);
    for (int r = 0; r < stride; ++r) {
        mpfr_init2(track[r], prec);
        set_arg(r, 0);
        mpfr_gamma(track[r], arg, MPFR_RNDN);
    }
    long shift = stride > 0 ? static_cast<long>(std::llround(alpha * stride)) : 0;

    long k_stop_after = 0;
    for (long k = 0;; ++k) {
        // term = (rho)_k * z^k / (k! * Gamma(alpha k + beta))
        if (stride > 0) {
            int r = static_cast<int>(k % stride);
            mpfr_set(g, track[r], MPFR_RNDN);
            // advance this track from k to k+stride: multiply by
            // (x)(x+1)...(x+shift-1) with x = alpha k + beta
            for (long j = 0; j < shift; ++j) {
                set_arg(k, j);
                mpfr_mul(track[r], track[r], arg, MPFR_RNDN);
            }
        } else {
            set_arg(k, 0);
            mpfr_gamma(g, arg, MPFR_RNDN);
        }
        mpfr_mul(term, pow_z, rising, MPFR_RNDN);
        mpfr_div(term, term, g, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);

        // Stop once the term is negligible against the working precision of
        // the largest-magnitude scale, for several consecutive terms (the
        // magnitude is unimodal in k).
        mpfr_abs(t1, term, MPFR_RNDN);
        double log_term = mpfr_cmp_d(t1, 0.0) == 0 ? -1e18 : mpfr_get_exp(t1) * std::log(2.0);
        double floor_log = peak - (prec - 64) * std::log(2.0);
        if (log_term < floor_log) {
            if (++k_stop_after >= 4) break;
        } else {
            k_stop_after = 0;
        }
        if (k > 5000000)
            throw std::runtime_error("mittag_leffler_reference: series did not terminate");

        mpfr_mul(pow_z, pow_z, zm, MPFR_RNDN);
        mpfr_div_ui(pow_z, pow_z, static_cast<unsigned long>(k + 1), MPFR_RNDN);
        mpfr_mul_d(rising, rising, rho + static_cast<double>(k), MPFR_RNDN);
    }
    double out = mpfr_get_d(sum, MPFR_RNDN);
    for (int r = 0; r < stride; ++r) mpfr_clear(track[r]);
    mpfr_clears(sum, term, pow_z, rising, arg, g, zm, t1, am, (mpfr_ptr)nullptr);
    return out;
}

}  // namespace

double mittag_leffler_reference(double alpha, double beta, double z) {
    return sum_series(alpha, beta, 1.0, z);
}

double prabhakar_ml_reference(double alpha, double beta, double rho, double z) {
    return sum_series(alpha, beta, rho, z);
}

}  // namespace tstfnbp
