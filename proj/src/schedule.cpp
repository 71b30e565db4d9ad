#include "zos/schedule.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zos {

int ceil_log2(int m) {
    if (m < 2) {
        throw std::invalid_argument("ceil_log2: argument must be at least 2");
    }
    return std::bit_width(static_cast<unsigned>(m - 1));
}

std::vector<SeedSymbol> encode_stay_channel(ChannelId s, int bits) {
    if (bits < 1) {
        throw std::invalid_argument("encode_stay_channel: bit count must be positive");
    }
    if (s < 1 || (bits < 31 && s - 1 >= (1 << bits))) {
        throw std::invalid_argument("encode_stay_channel: stay channel out of range");
    }
    const unsigned value = static_cast<unsigned>(s - 1);
    std::vector<SeedSymbol> encoded(static_cast<std::size_t>(bits));
    for (int i = 0; i < bits; ++i) {
        const bool bit = (value >> (bits - 1 - i)) & 1u;
        encoded[static_cast<std::size_t>(i)] = bit ? SeedSymbol::One : SeedSymbol::Zero;
    }
    return encoded;
}

Seed build_seed(int M, ChannelId s, int L) {
    if (M < 2) {
        throw std::invalid_argument("build_seed: M must be at least 2");
    }
    if (L != ceil_log2(M)) {
        throw std::invalid_argument("build_seed: L must equal ceil(log2 M)");
    }
    if (s < 1 || s > M) {
        throw std::invalid_argument("build_seed: stay channel out of range");
    }

    Seed seed;
    seed.L = L;
    seed.stay_channel = s;
    seed.symbols.reserve(static_cast<std::size_t>(6 * L + 1));

    const std::vector<SeedSymbol> a = encode_stay_channel(s, L);
    for (int block = 0; block < 2; ++block) {
        seed.symbols.insert(seed.symbols.end(), a.begin(), a.end());
        seed.symbols.insert(seed.symbols.end(), static_cast<std::size_t>(L), SeedSymbol::Zero);
        seed.symbols.insert(seed.symbols.end(), static_cast<std::size_t>(L), SeedSymbol::One);
    }
    seed.symbols.push_back(SeedSymbol::Stay);
    return seed;
}

Seed build_seed(int M, ChannelId s) {
    return build_seed(M, s, ceil_log2(M));
}

ZosSchedule::ZosSchedule(int M, ChannelSet available, Seed seed,
                         std::vector<ElementarySequence> columns)
    : M_(M), available_(std::move(available)), seed_(std::move(seed)),
      columns_(std::move(columns)) {}

ZosSchedule ZosSchedule::generate(int M, const ChannelSet& available, RngStream& rng,
                                  std::optional<ChannelId> stay_override) {
    if (available.universe_size() != M) {
        throw std::invalid_argument("ZosSchedule: available set built for a different M");
    }
    ChannelId stay;
    if (stay_override) {
        if (!available.contains(*stay_override)) {
            throw std::invalid_argument("ZosSchedule: stay override not in the available set");
        }
        stay = *stay_override;
    } else {
        stay = available.members()[rng.next_below(available.members().size())];
    }

    Seed seed = build_seed(M, stay);
    const int bit_count = 6 * seed.L;

    std::vector<ElementarySequence> columns;
    columns.reserve(static_cast<std::size_t>(bit_count) + 1);
    for (int i = 0; i < bit_count; ++i) {
        const int b = seed.symbols[static_cast<std::size_t>(i)] == SeedSymbol::One ? 1 : 0;
        columns.push_back(zero_one_es(available, b, rng));
    }
    ElementarySequence stay_column;
    stay_column.kind = SequenceKind::SType;
    stay_column.items = {stay};
    columns.push_back(std::move(stay_column));

    return ZosSchedule(M, available, std::move(seed), std::move(columns));
}

RoundPosition ZosSchedule::position_at(std::uint64_t t) const {
    if (t == 0) {
        throw std::invalid_argument("position_at: timeslots start at 1");
    }
    const auto period = static_cast<std::uint64_t>(columns_.size());
    const std::uint64_t column = (t - 1) % period;
    const std::uint64_t round = (t - 1) / period;
    const auto& items = columns_[column].items;
    return RoundPosition{static_cast<int>(column) + 1, round % items.size() + 1};
}

ChannelId ZosSchedule::channel_at(std::uint64_t t) const {
    const RoundPosition position = position_at(t);
    return columns_[static_cast<std::size_t>(position.column - 1)]
        .items[position.row - 1];
}

std::string format_schedule(const ZosSchedule& schedule) {
    std::ostringstream out;
    out << schedule.whole_set_size() << ' ' << schedule.L() << ' '
        << schedule.seed().stay_channel << '\n';
    for (SeedSymbol symbol : schedule.seed().symbols) {
        out << (symbol == SeedSymbol::Zero ? '0' : symbol == SeedSymbol::One ? '1' : 's');
    }
    out << '\n';
    for (const ElementarySequence& column : schedule.columns()) {
        for (std::size_t i = 0; i < column.items.size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << column.items[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace zos
