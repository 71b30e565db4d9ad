#pragma once

#include <cstddef>
#include <vector>

#include "zos/channel_set.hpp"
#include "zos/rng.hpp"

namespace zos {

enum class SequenceKind { ZeroType, OneType, SType };

// One column of the hopping table. A 0-type sequence has 2P items, a
// 1-type sequence has 2P(P+1) items, and an s-type sequence is the single
// stay channel. `prime` is the P used during construction (0 for s-type).
struct ElementarySequence {
    SequenceKind kind = SequenceKind::SType;
    int prime = 0;
    std::vector<ChannelId> items;

    std::size_t length() const { return items.size(); }
};

// Builds a 0-type (b = 0) or 1-type (b = 1) elementary sequence over the
// available set.
//
// With m = |available| and P the smallest prime >= m, two sequences are
// drawn: X of length P and Y of length P+b, each starting with a fresh
// random permutation of the available set and padded with random
// selections. The result interleaves them: item 2k-1 comes from X and
// item 2k from Y, with X and Y repeating cyclically when b = 1.
ElementarySequence zero_one_es(const ChannelSet& available, int b, RngStream& rng);

} // namespace zos
