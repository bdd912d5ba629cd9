// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tstfnbp {

/// A series evaluation did not reach the requested tolerance within the
/// allowed number of terms.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// A gamma argument of a series term landed on a non-positive integer.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Parameter constraint violated (e.g. lambda1 <= mu^alpha for a pdf request).
class ConstraintError : public std::domain_error {
public:
    explicit ConstraintError(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature failed to converge.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// A rejection sampler exhausted its proposal budget.
class RejectionBudgetError : public std::runtime_error {
public:
    explicit RejectionBudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Alternating-series cancellation exceeded the working precision budget.
class CancellationError : public std::runtime_error {
public:
    explicit CancellationError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncation and tolerance policy shared by all infinite-series evaluators.
/// A series either converges (two successive partial-sum deltas below
/// tolerance) or a TruncationError is thrown; an unconverged sum is never
/// returned silently.  Evaluators scale the absolute branch of the tolerance
/// by the largest term seen when that peak is below one, so results far
/// beneath abs_tol are still resolved down to the intrinsic noise floor.
struct SeriesControl {
    std::size_t max_terms = 2000;
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;

    void validate() const {
        if (max_terms < 1)
            throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
        if (abs_tol < 0.0 || rel_tol < 0.0)
            throw std::invalid_argument("SeriesControl: tolerances must be non-negative");
        if (abs_tol == 0.0 && rel_tol == 0.0)
            throw std::invalid_argument("SeriesControl: at least one tolerance must be positive");
    }

    bool accepts(double delta, double sum) const {
        double d = delta < 0 ? -delta : delta;
        double s = sum < 0 ? -sum : sum;
        return d <= abs_tol || d <= rel_tol * s;
    }
};

/// Tolerance policy for adaptive quadrature.
struct QuadControl {
    double tol = 1e-10;
    std::size_t max_refinements = 15;
};

}  // namespace tstfnbp
