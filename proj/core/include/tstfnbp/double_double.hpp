// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace tstfnbp {

// Compensated (double-double) accumulator, ~32 significant digits.  Used
// wherever alternating series lose more digits than plain double can spare.
class DoubleDouble {
public:
    DoubleDouble() = default;
    explicit DoubleDouble(double x) : hi_(x) {}

    DoubleDouble& operator+=(double x) {
        // Knuth two-sum of x against hi_, error folded into lo_.
        double s = hi_ + x;
        double bb = s - hi_;
        double err = (hi_ - (s - bb)) + (x - bb);
        lo_ += err;
        // renormalize
        hi_ = s + lo_;
        lo_ -= (hi_ - s);
        return *this;
    }

    double value() const { return hi_; }
    double abs() const { return std::fabs(hi_); }

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

}  // namespace tstfnbp
