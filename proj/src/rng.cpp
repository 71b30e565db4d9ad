#include "zos/rng.hpp"

#include <stdexcept>
#include <utility>

namespace zos {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 output scrambler; also used as the label-mixing hash.
std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xCBF29CE484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ull;
    }
    return hash;
}

} // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

std::uint64_t RngStream::next_u64() {
    state_ += kGolden;
    return scramble(state_);
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("RngStream::next_below: n must be positive");
    }
    // Rejection sampling over the largest multiple of n below 2^64.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) {
            return r % n;
        }
    }
}

RngStream RngStream::derive(std::string_view label) const {
    return RngStream(scramble(seed_ ^ (fnv1a(label) + kGolden)));
}

RngStream RngStream::derive(std::uint64_t index) const {
    return RngStream(scramble(seed_ ^ scramble(index + kGolden)));
}

std::vector<ChannelId> random_permutation(const ChannelSet& set, RngStream& rng) {
    std::vector<ChannelId> items = set.members();
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[rng.next_below(i)]);
    }
    return items;
}

std::vector<ChannelId> random_selection(const ChannelSet& set, int k, RngStream& rng) {
    if (k < 0) {
        throw std::invalid_argument("random_selection: k must be nonnegative");
    }
    const auto& members = set.members();
    std::vector<ChannelId> items;
    items.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        items.push_back(members[rng.next_below(members.size())]);
    }
    return items;
}

} // namespace zos
