#include "zos/channel_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace zos {

ChannelSet::ChannelSet(int universe_size, std::vector<ChannelId> members)
    : universe_size_(universe_size), members_(std::move(members)) {
    if (universe_size_ < 2) {
        throw std::invalid_argument("ChannelSet: whole-set size must be at least 2");
    }
    if (members_.empty()) {
        throw std::invalid_argument("ChannelSet: available set must be nonempty");
    }
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("ChannelSet: members must be distinct");
    }
    if (members_.front() < 1 || members_.back() > universe_size_) {
        throw std::invalid_argument("ChannelSet: members must lie in [1, M]");
    }
}

bool ChannelSet::contains(ChannelId channel) const {
    return std::binary_search(members_.begin(), members_.end(), channel);
}

std::vector<ChannelId> intersect(const ChannelSet& a, const ChannelSet& b) {
    std::vector<ChannelId> common;
    std::set_intersection(a.members().begin(), a.members().end(),
                          b.members().begin(), b.members().end(),
                          std::back_inserter(common));
    return common;
}

} // namespace zos
