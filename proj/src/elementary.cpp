#include "zos/elementary.hpp"

#include <stdexcept>

#include "zos/primes.hpp"

namespace zos {

ElementarySequence zero_one_es(const ChannelSet& available, int b, RngStream& rng) {
    if (b != 0 && b != 1) {
        throw std::invalid_argument("zero_one_es: b must be 0 or 1");
    }
    const int m = available.size();
    const int p = smallest_prime_at_least(m);

    // X has P items, Y has P+b; each starts with a fresh permutation of the
    // available set and is padded with uniform selections.
    std::vector<ChannelId> x = random_permutation(available, rng);
    if (p > m) {
        const auto fill = random_selection(available, p - m, rng);
        x.insert(x.end(), fill.begin(), fill.end());
    }
    std::vector<ChannelId> y = random_permutation(available, rng);
    if (p + b > m) {
        const auto fill = random_selection(available, p + b - m, rng);
        y.insert(y.end(), fill.begin(), fill.end());
    }

    ElementarySequence sequence;
    sequence.kind = b == 0 ? SequenceKind::ZeroType : SequenceKind::OneType;
    sequence.prime = p;
    if (b == 0) {
        // 2P items: odd positions walk X once, even positions walk Y once.
        sequence.items.reserve(2 * static_cast<std::size_t>(p));
        for (int k = 0; k < p; ++k) {
            sequence.items.push_back(x[static_cast<std::size_t>(k)]);
            sequence.items.push_back(y[static_cast<std::size_t>(k)]);
        }
    } else {
        // 2P(P+1) items: odd positions repeat X (period P) P+1 times, even
        // positions repeat Y (period P+1) P times.
        const int half = p * (p + 1);
        sequence.items.reserve(2 * static_cast<std::size_t>(half));
        for (int k = 0; k < half; ++k) {
            sequence.items.push_back(x[static_cast<std::size_t>(k % p)]);
            sequence.items.push_back(y[static_cast<std::size_t>(k % (p + 1))]);
        }
    }
    return sequence;
}

} // namespace zos
