#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "zos/channel_set.hpp"
#include "zos/elementary.hpp"
#include "zos/rng.hpp"
#include "zos/schedule.hpp"

namespace zos {

struct Meeting {
    std::uint64_t ttr = 0; // slots counted from the later starter's first slot
    ChannelId channel = 0;
};

// Outcome of one simulated pair. A timeout is a value, not an error.
struct RendezvousResult {
    std::optional<Meeting> meeting;
    std::uint64_t horizon = 0;

    bool met() const { return meeting.has_value(); }
};

template <class S>
concept HoppingSchedule = requires(const S& s, std::uint64_t t) {
    { s.channel_at(t) } -> std::convertible_to<ChannelId>;
    { s.available() } -> std::convertible_to<const ChannelSet&>;
    { s.whole_set_size() } -> std::convertible_to<int>;
};

// Random-hopping baseline: every slot is an independent uniform draw from
// the available set, deterministic given the construction-time rng seed.
class BaselineSchedule {
public:
    BaselineSchedule(int M, ChannelSet available, RngStream& rng);

    int whole_set_size() const { return M_; }
    const ChannelSet& available() const { return available_; }
    ChannelId channel_at(std::uint64_t t) const;

private:
    int M_;
    ChannelSet available_;
    std::uint64_t key_;
};

// Steps both users slot by slot with shared slot boundaries; user 2 leads
// by `offset` slots, so user 1's slot t aligns with user 2's slot
// t + offset. Returns the first t <= horizon where both occupy the same
// channel. Requires matching whole-set sizes and intersecting available
// sets.
template <HoppingSchedule S1, HoppingSchedule S2>
RendezvousResult simulate_pair(const S1& user1, const S2& user2,
                               std::uint64_t offset, std::uint64_t horizon) {
    if (user1.whole_set_size() != user2.whole_set_size()) {
        throw std::invalid_argument("simulate_pair: schedules disagree on the whole-set size");
    }
    if (intersect(user1.available(), user2.available()).empty()) {
        throw std::invalid_argument("simulate_pair: available sets do not intersect");
    }
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        const ChannelId a = user1.channel_at(t);
        const ChannelId b = user2.channel_at(t + offset);
        if (a == b) {
            return RendezvousResult{Meeting{t, a}, horizon};
        }
    }
    return RendezvousResult{std::nullopt, horizon};
}

// Both users cycle a single elementary sequence forever (user 2 shifted by
// `offset`). One sequence must be 0-type and the other 1-type, and their
// channel sets must intersect.
RendezvousResult simulate_elementary_pair(const ElementarySequence& seq1,
                                          const ElementarySequence& seq2,
                                          std::uint64_t offset, std::uint64_t horizon);

} // namespace zos
