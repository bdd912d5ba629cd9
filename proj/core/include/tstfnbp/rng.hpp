// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace tstfnbp {

/// Seedable, stream-partitioned PRNG.  Two streams with the same
/// (seed, stream_id) produce identical sequences; distinct stream_ids give
/// statistically independent streams (the mt19937_64 state is keyed through
/// splitmix64 on both values).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform();

    /// Exponential(1).
    double exponential();

    /// Standard normal (Box-Muller, no state carried between calls).
    double normal();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 gen_;
};

}  // namespace tstfnbp
