#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zos/channel_set.hpp"
#include "zos/elementary.hpp"
#include "zos/rng.hpp"

namespace zos {

enum class SeedSymbol { Zero, One, Stay };

// ceil(log2(m)) for m >= 2; the seed block length L.
int ceil_log2(int m);

// Big-endian L-bit binary encoding of the stay channel, zero-based: the
// bits of s-1. Requires 1 <= s <= 2^L. Distinct stay channels yield
// distinct encodings.
std::vector<SeedSymbol> encode_stay_channel(ChannelId s, int bits);

// The (6L+1)-symbol seed <A, O, I, A, O, I, Stay> where A encodes the stay
// channel, O is L zeros and I is L ones.
struct Seed {
    int L = 0;
    ChannelId stay_channel = 0;
    std::vector<SeedSymbol> symbols;
};

Seed build_seed(int M, ChannelId s, int L);
Seed build_seed(int M, ChannelId s); // L = ceil_log2(M)

// 1-based coordinates of a timeslot in the hopping table: column in
// [1, 6L+1], row cycling through that column's sequence.
struct RoundPosition {
    int column = 0;
    std::uint64_t row = 0;

    friend bool operator==(const RoundPosition&, const RoundPosition&) = default;
};

// A user's complete hopping state: one elementary sequence per seed
// position, cycled column-by-column. Immutable once generated; channel_at
// is pure arithmetic lookup and the schedule extends to any timeslot.
class ZosSchedule {
public:
    static ZosSchedule generate(int M, const ChannelSet& available, RngStream& rng,
                                std::optional<ChannelId> stay_override = std::nullopt);

    int whole_set_size() const { return M_; }
    int L() const { return seed_.L; }
    int round_length() const { return static_cast<int>(columns_.size()); } // 6L+1
    const ChannelSet& available() const { return available_; }
    const Seed& seed() const { return seed_; }
    const std::vector<ElementarySequence>& columns() const { return columns_; }

    // Table coordinates of timeslot t (t >= 1): column ((t-1) mod (6L+1))+1,
    // row advancing once per round and cycling the column's sequence.
    RoundPosition position_at(std::uint64_t t) const;

    // Channel hopped on in timeslot t.
    ChannelId channel_at(std::uint64_t t) const;

private:
    ZosSchedule(int M, ChannelSet available, Seed seed, std::vector<ElementarySequence> columns);

    int M_;
    ChannelSet available_;
    Seed seed_;
    std::vector<ElementarySequence> columns_;
};

// Line-oriented text form: header line "M L stay", then the seed symbols
// as one string of 0/1/s, then one column per line as space-separated
// channel indices.
std::string format_schedule(const ZosSchedule& schedule);

} // namespace zos
