#pragma once

#include <utility>

#include "zos/channel_set.hpp"
#include "zos/rng.hpp"

namespace zos {

// Draws (C1, C2) with |C1| = m1, |C2| = m2 and exactly `common` shared
// channels, uniformly without replacement from {1, ..., M}. Requires
// 1 <= common <= min(m1, m2) and m1 + m2 - common <= M.
std::pair<ChannelSet, ChannelSet> sample_channel_sets(int M, int m1, int m2, int common,
                                                      RngStream& rng);

} // namespace zos
