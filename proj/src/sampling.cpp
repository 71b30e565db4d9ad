#include "zos/sampling.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace zos {

std::pair<ChannelSet, ChannelSet> sample_channel_sets(int M, int m1, int m2, int common,
                                                      RngStream& rng) {
    if (common < 1 || common > std::min(m1, m2)) {
        throw std::invalid_argument("sample_channel_sets: overlap must satisfy 1 <= G <= min(m1, m2)");
    }
    if (m1 + m2 - common > M) {
        throw std::invalid_argument("sample_channel_sets: m1 + m2 - G channels do not fit in M");
    }

    // One partial Fisher-Yates shuffle of {1..M}; the prefix splits into the
    // common block and the two private blocks, all uniform without
    // replacement.
    std::vector<ChannelId> pool(static_cast<std::size_t>(M));
    std::iota(pool.begin(), pool.end(), 1);
    const int needed = m1 + m2 - common;
    for (int i = 0; i < needed; ++i) {
        const auto j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(M - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }

    std::vector<ChannelId> first(pool.begin(), pool.begin() + common);
    first.insert(first.end(), pool.begin() + common, pool.begin() + m1);
    std::vector<ChannelId> second(pool.begin(), pool.begin() + common);
    second.insert(second.end(), pool.begin() + m1, pool.begin() + needed);

    return {ChannelSet(M, std::move(first)), ChannelSet(M, std::move(second))};
}

} // namespace zos
