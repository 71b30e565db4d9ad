#include "zos/sim.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zos {

namespace {

std::vector<ChannelId> distinct_channels(const ElementarySequence& sequence) {
    std::vector<ChannelId> channels = sequence.items;
    std::sort(channels.begin(), channels.end());
    channels.erase(std::unique(channels.begin(), channels.end()), channels.end());
    return channels;
}

} // namespace

BaselineSchedule::BaselineSchedule(int M, ChannelSet available, RngStream& rng)
    : M_(M), available_(std::move(available)), key_(rng.next_u64()) {
    if (available_.universe_size() != M) {
        throw std::invalid_argument("BaselineSchedule: available set built for a different M");
    }
}

ChannelId BaselineSchedule::channel_at(std::uint64_t t) const {
    // Stateless per-slot draw: a fresh stream keyed by (key, t) keeps
    // channel_at pure while staying replay-identical for one key.
    RngStream slot = RngStream(key_).derive(t);
    const auto& members = available_.members();
    return members[slot.next_below(members.size())];
}

RendezvousResult simulate_elementary_pair(const ElementarySequence& seq1,
                                          const ElementarySequence& seq2,
                                          std::uint64_t offset, std::uint64_t horizon) {
    const bool kinds_ok =
        (seq1.kind == SequenceKind::OneType && seq2.kind == SequenceKind::ZeroType) ||
        (seq1.kind == SequenceKind::ZeroType && seq2.kind == SequenceKind::OneType);
    if (!kinds_ok) {
        throw std::invalid_argument(
            "simulate_elementary_pair: needs one 0-type and one 1-type sequence");
    }
    const std::vector<ChannelId> channels1 = distinct_channels(seq1);
    const std::vector<ChannelId> channels2 = distinct_channels(seq2);
    std::vector<ChannelId> common;
    std::set_intersection(channels1.begin(), channels1.end(), channels2.begin(), channels2.end(),
                          std::back_inserter(common));
    if (common.empty()) {
        throw std::invalid_argument("simulate_elementary_pair: channel sets do not intersect");
    }

    const std::uint64_t n1 = seq1.items.size();
    const std::uint64_t n2 = seq2.items.size();
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        const ChannelId a = seq1.items[(t - 1) % n1];
        const ChannelId b = seq2.items[(t + offset - 1) % n2];
        if (a == b) {
            return RendezvousResult{Meeting{t, a}, horizon};
        }
    }
    return RendezvousResult{std::nullopt, horizon};
}

} // namespace zos
