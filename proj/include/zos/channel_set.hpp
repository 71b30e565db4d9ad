#pragma once

#include <vector>

namespace zos {

// 1-based index of a licensed channel within the whole set {1, ..., M}.
using ChannelId = int;

// A user's available subset of the whole channel set. Members are stored
// sorted ascending and must be distinct, nonempty, and within [1, M].
class ChannelSet {
public:
    ChannelSet(int universe_size, std::vector<ChannelId> members);

    int universe_size() const { return universe_size_; }
    const std::vector<ChannelId>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(ChannelId channel) const;

    friend bool operator==(const ChannelSet&, const ChannelSet&) = default;

private:
    int universe_size_;
    std::vector<ChannelId> members_;
};

// Sorted common channels of two sets.
std::vector<ChannelId> intersect(const ChannelSet& a, const ChannelSet& b);

} // namespace zos
