// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#include "tstfnbp/rng.hpp"

#include <cmath>

namespace tstfnbp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    std::uint64_t k0 = splitmix64(s);
    std::uint64_t k1 = splitmix64(s);
    std::uint64_t k2 = splitmix64(s);
    std::uint64_t k3 = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(k0), static_cast<std::uint32_t>(k0 >> 32),
                      static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k1 >> 32),
                      static_cast<std::uint32_t>(k2), static_cast<std::uint32_t>(k2 >> 32),
                      static_cast<std::uint32_t>(k3), static_cast<std::uint32_t>(k3 >> 32)};
    gen_.seed(seq);
}

double RngStream::uniform() {
    // 53-bit mantissa, centered so both endpoints are excluded.
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() { return -std::log(uniform()); }

double RngStream::normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace tstfnbp
