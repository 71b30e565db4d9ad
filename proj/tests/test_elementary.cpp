#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "zos/elementary.hpp"
#include "zos/primes.hpp"
#include "zos/rng.hpp"

using namespace zos;

namespace {

std::vector<ChannelId> odd_positions(const ElementarySequence& sequence) {
    std::vector<ChannelId> odds;
    for (std::size_t i = 0; i < sequence.items.size(); i += 2) {
        odds.push_back(sequence.items[i]);
    }
    return odds;
}

std::vector<ChannelId> even_positions(const ElementarySequence& sequence) {
    std::vector<ChannelId> evens;
    for (std::size_t i = 1; i < sequence.items.size(); i += 2) {
        evens.push_back(sequence.items[i]);
    }
    return evens;
}

// True when every cyclic window of `window` consecutive items contains every
// member of the set.
bool cyclic_windows_cover(const std::vector<ChannelId>& items, std::size_t window,
                          const ChannelSet& set) {
    for (std::size_t start = 0; start < items.size(); ++start) {
        for (ChannelId channel : set.members()) {
            bool found = false;
            for (std::size_t k = 0; k < window; ++k) {
                if (items[(start + k) % items.size()] == channel) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

ChannelSet contiguous_set(int M, int m) {
    std::vector<ChannelId> members;
    for (int c = 1; c <= m; ++c) {
        members.push_back(c);
    }
    return ChannelSet(M, std::move(members));
}

} // namespace

TEST_CASE("interleaving matches a hand-built fixture") {
    const ChannelSet available(5, {1, 3, 4});
    const std::vector<ChannelId> want_x = {3, 1, 4};
    const std::vector<ChannelId> want_y = {4, 3, 1};

    // Find a seed whose first two permutation draws are exactly X and Y;
    // zero_one_es with m = P = 3 and b = 0 consumes the stream the same way.
    std::optional<std::uint64_t> fixture_seed;
    for (std::uint64_t seed = 0; seed < 200'000 && !fixture_seed; ++seed) {
        RngStream probe(seed);
        if (random_permutation(available, probe) == want_x &&
            random_permutation(available, probe) == want_y) {
            fixture_seed = seed;
        }
    }
    REQUIRE(fixture_seed.has_value());

    RngStream rng(*fixture_seed);
    const ElementarySequence sequence = zero_one_es(available, 0, rng);
    CHECK(sequence.kind == SequenceKind::ZeroType);
    CHECK(sequence.prime == 3);
    CHECK(sequence.items == std::vector<ChannelId>{3, 4, 1, 3, 4, 1});
}

TEST_CASE("a singleton set forces every item to its only channel") {
    const ChannelSet available(3, {2});
    RngStream rng(11);
    const ElementarySequence sequence = zero_one_es(available, 0, rng);
    CHECK(sequence.prime == 2);
    CHECK(sequence.items == std::vector<ChannelId>{2, 2, 2, 2});
}

TEST_CASE("1-type length for a pair of channels is 12") {
    const ChannelSet available(4, {2, 3});
    RngStream rng(17);
    const ElementarySequence sequence = zero_one_es(available, 1, rng);
    CHECK(sequence.kind == SequenceKind::OneType);
    CHECK(sequence.items.size() == 12); // 2 * 2 * 3
}

TEST_CASE("length laws hold for every set size up to 50") {
    RngStream rng(360);
    for (int m = 1; m <= 50; ++m) {
        const ChannelSet available = contiguous_set(64, m);
        const auto p = static_cast<std::size_t>(smallest_prime_at_least(m));

        const ElementarySequence zero = zero_one_es(available, 0, rng);
        CHECK(zero.items.size() == 2 * p);
        const ElementarySequence one = zero_one_es(available, 1, rng);
        CHECK(one.items.size() == 2 * p * (p + 1));

        for (ChannelId c : zero.items) {
            CHECK(available.contains(c));
        }
        for (ChannelId c : one.items) {
            CHECK(available.contains(c));
        }
    }
}

TEST_CASE("1-type odd items repeat X and even items repeat Y") {
    RngStream rng(8123);
    for (int m : {1, 2, 3, 5, 8, 13}) {
        const ChannelSet available = contiguous_set(16, m);
        const ElementarySequence one = zero_one_es(available, 1, rng);
        const auto p = static_cast<std::size_t>(one.prime);

        const auto odds = odd_positions(one);
        const auto evens = even_positions(one);
        REQUIRE(odds.size() == p * (p + 1));
        REQUIRE(evens.size() == p * (p + 1));

        // Odd positions: X (period P) repeated P+1 times.
        for (std::size_t k = 0; k < odds.size(); ++k) {
            CHECK(odds[k] == odds[k % p]);
        }
        // Even positions: Y (period P+1) repeated P times.
        for (std::size_t k = 0; k < evens.size(); ++k) {
            CHECK(evens[k] == evens[k % (p + 1)]);
        }

        // The leading m entries of each half form a permutation of the set.
        std::vector<ChannelId> x_prefix(odds.begin(), odds.begin() + m);
        std::sort(x_prefix.begin(), x_prefix.end());
        CHECK(x_prefix == available.members());
        std::vector<ChannelId> y_prefix(evens.begin(), evens.begin() + m);
        std::sort(y_prefix.begin(), y_prefix.end());
        CHECK(y_prefix == available.members());
    }
}

TEST_CASE("every window of P odd slots and P+b even slots covers the set") {
    RngStream rng(555);
    for (int m : {1, 2, 3, 4, 6, 9}) {
        const ChannelSet available = contiguous_set(12, m);
        for (int b : {0, 1}) {
            const ElementarySequence sequence = zero_one_es(available, b, rng);
            const auto p = static_cast<std::size_t>(sequence.prime);
            CHECK(cyclic_windows_cover(odd_positions(sequence), p, available));
            CHECK(cyclic_windows_cover(even_positions(sequence), p + static_cast<std::size_t>(b),
                                       available));
        }
    }
}

TEST_CASE("X and Y come from independent permutations") {
    const ChannelSet available(8, {1, 4, 7});
    int differing = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RngStream rng(seed);
        const ElementarySequence zero = zero_one_es(available, 0, rng);
        const auto odds = odd_positions(zero);
        const auto evens = even_positions(zero);
        const std::vector<ChannelId> x_prefix(odds.begin(), odds.begin() + available.size());
        const std::vector<ChannelId> y_prefix(evens.begin(), evens.begin() + available.size());
        if (x_prefix != y_prefix) {
            ++differing;
        }
    }
    CHECK(differing > 0);
}

TEST_CASE("fresh randomness per invocation") {
    const ChannelSet available(8, {1, 2, 3, 4, 5});
    RngStream rng(64);
    const ElementarySequence first = zero_one_es(available, 1, rng);
    const ElementarySequence second = zero_one_es(available, 1, rng);
    CHECK(first.items != second.items);
}

TEST_CASE("zero_one_es rejects invalid b") {
    const ChannelSet available(4, {1, 2});
    RngStream rng(1);
    CHECK_THROWS_AS(zero_one_es(available, 2, rng), std::invalid_argument);
    CHECK_THROWS_AS(zero_one_es(available, -1, rng), std::invalid_argument);
}
