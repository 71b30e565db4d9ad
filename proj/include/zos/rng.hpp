#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "zos/channel_set.hpp"

namespace zos {

// Deterministic 64-bit random stream (splitmix64). The same seed always
// reproduces the same stream. Substreams are derived by hashing a label
// into the construction seed, so streams for distinct (trial, user,
// call-site) labels never share state. Derivation depends only on the
// seed, not on how much of the parent stream has been consumed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    // Unbiased uniform draw from [0, n); n must be positive.
    std::uint64_t next_below(std::uint64_t n);

    RngStream derive(std::string_view label) const;
    RngStream derive(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

// Uniform random permutation of the set's members (Fisher-Yates).
std::vector<ChannelId> random_permutation(const ChannelSet& set, RngStream& rng);

// k independent uniform draws from the set, with replacement.
std::vector<ChannelId> random_selection(const ChannelSet& set, int k, RngStream& rng);

} // namespace zos
