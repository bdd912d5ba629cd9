// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <vector>

namespace tstfnbp {

/// Time grid plus process values.  Subordinator paths start at (0,0) and are
/// non-decreasing; counting paths hold non-negative, non-decreasing integers.
struct SamplePath {
    std::vector<double> times;
    std::vector<double> values;

    void check_monotone() const {
        if (times.size() != values.size())
            throw std::invalid_argument("SamplePath: times/values length mismatch");
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (!(times[i] > times[i - 1]))
                throw std::invalid_argument("SamplePath: times must be strictly increasing");
            if (values[i] < values[i - 1])
                throw std::invalid_argument("SamplePath: values must be non-decreasing");
        }
    }
};

}  // namespace tstfnbp
