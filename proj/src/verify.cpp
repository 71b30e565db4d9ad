#include "zos/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zos/channel_set.hpp"
#include "zos/elementary.hpp"
#include "zos/primes.hpp"
#include "zos/rng.hpp"
#include "zos/sampling.hpp"
#include "zos/schedule.hpp"
#include "zos/sim.hpp"

namespace zos {

namespace {

std::string describe_set(const ChannelSet& set) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < set.members().size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << set.members()[i];
    }
    out << '}';
    return out.str();
}

int sample_feasible_overlap(int M, int m1, int m2, RngStream& rng) {
    const int lo = std::max(1, m1 + m2 - M);
    const int hi = std::min(m1, m2);
    return lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

void require_sizes(int M, int m1, int m2) {
    if (m1 < 1 || m2 < 1) {
        throw std::invalid_argument("verify: set sizes must be positive");
    }
    if (std::max(m1, m2) > M) {
        throw std::invalid_argument("verify: set sizes must not exceed the whole-set size");
    }
}

// All ordered pairs of intersecting subsets of {1..M} with the given sizes.
std::vector<std::pair<ChannelSet, ChannelSet>> enumerate_intersecting_pairs(int M, int m1,
                                                                            int m2) {
    std::vector<unsigned> masks1;
    std::vector<unsigned> masks2;
    for (unsigned mask = 1; mask < (1u << M); ++mask) {
        const int size = std::popcount(mask);
        if (size == m1) {
            masks1.push_back(mask);
        }
        if (size == m2) {
            masks2.push_back(mask);
        }
    }
    auto to_set = [M](unsigned mask) {
        std::vector<ChannelId> members;
        for (int c = 0; c < M; ++c) {
            if (mask & (1u << c)) {
                members.push_back(c + 1);
            }
        }
        return ChannelSet(M, std::move(members));
    };
    std::vector<std::pair<ChannelSet, ChannelSet>> pairs;
    for (unsigned a : masks1) {
        for (unsigned b : masks2) {
            if (a & b) {
                pairs.emplace_back(to_set(a), to_set(b));
            }
        }
    }
    return pairs;
}

// One elementary-sequence direction: every cyclic offset of `one` against
// `zero`, horizon = bound. Returns false (and fills the witness) on the
// first offset that fails to meet within the bound.
bool sweep_elementary_direction(const ElementarySequence& one, const ElementarySequence& zero,
                                std::uint64_t bound, BoundReport& report,
                                std::uint64_t& direction_worst, const std::string& context) {
    const std::uint64_t cycle = std::lcm(one.items.size(), zero.items.size());
    for (std::uint64_t offset = 0; offset < cycle; ++offset) {
        const RendezvousResult result = simulate_elementary_pair(one, zero, offset, bound);
        ++report.offsets_checked;
        if (!result.met()) {
            report.pass = false;
            if (report.witness.empty()) {
                std::ostringstream witness;
                witness << context << " offset=" << offset << " no rendezvous within " << bound;
                report.witness = witness.str();
            }
            return false;
        }
        direction_worst = std::max(direction_worst, result.meeting->ttr);
    }
    return true;
}

} // namespace

std::ostream& operator<<(std::ostream& out, const BoundReport& report) {
    out << (report.pass ? "[PASS] " : "[FAIL] ") << report.description << ": worst "
        << report.worst_observed_ttr << " vs bound " << report.bound << " (" << report.trials
        << " trials, " << report.offsets_checked << " offset runs";
    if (report.regime_skips > 0) {
        out << ", " << report.regime_skips << " regime skips";
    }
    out << ")";
    if (!report.witness.empty()) {
        out << "; witness: " << report.witness;
    }
    return out;
}

std::uint64_t theorem1_bound(int m1, int m2) {
    const auto p1 = static_cast<std::uint64_t>(smallest_prime_at_least(m1));
    const auto p2 = static_cast<std::uint64_t>(smallest_prime_at_least(m2));
    return 2 * (p1 + 1) * p2;
}

std::uint64_t theorem2_bound(int M, int m1, int m2) {
    require_sizes(M, m1, m2);
    const auto L = static_cast<std::uint64_t>(ceil_log2(M));
    const auto p1 = static_cast<std::uint64_t>(smallest_prime_at_least(m1));
    const auto p2 = static_cast<std::uint64_t>(smallest_prime_at_least(m2));
    const std::uint64_t tight = (12 * L + 2) * (p1 * p2 + std::max(p1, p2));
    const auto um1 = static_cast<std::uint64_t>(m1);
    const auto um2 = static_cast<std::uint64_t>(m2);
    const std::uint64_t loose = (24 * L + 4) * (2 * um1 * um2 + std::max(um1, um2));
    if (tight > loose) {
        throw std::logic_error("theorem2_bound: tight form exceeded the loose form");
    }
    return tight;
}

bool check_crt_alignment(int p, int q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
        throw std::invalid_argument("check_crt_alignment: p and q must be positive and coprime");
    }
    // Sentinel items 1..p and 1..q keep the two cycles distinguishable.
    std::vector<int> u;
    std::vector<int> v;
    for (int rep = 0; rep < q; ++rep) {
        for (int i = 1; i <= p; ++i) {
            u.push_back(i);
        }
    }
    for (int rep = 0; rep < p; ++rep) {
        for (int j = 1; j <= q; ++j) {
            v.push_back(j);
        }
    }
    std::vector<char> hit(static_cast<std::size_t>(p) * static_cast<std::size_t>(q), 0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const int i = u[k];
        const int j = v[k];
        hit[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(q) +
            static_cast<std::size_t>(j - 1)] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h == 1; });
}

BoundReport verify_theorem1(int m1, int m2, const std::vector<std::uint64_t>& rng_seeds,
                            int universe_size) {
    require_sizes(universe_size, m1, m2);

    BoundReport report;
    report.pass = true;
    report.bound = theorem1_bound(m1, m2);
    const std::uint64_t swapped_bound = theorem1_bound(m2, m1);
    {
        std::ostringstream description;
        description << "elementary 1-type/0-type bound, m1=" << m1 << " m2=" << m2
                    << " M=" << universe_size << " seeds=" << rng_seeds.size();
        report.description = description.str();
    }

    std::uint64_t swapped_worst = 0;
    for (std::uint64_t seed : rng_seeds) {
        RngStream root(seed);
        RngStream overlap_rng = root.derive("overlap");
        const int overlap = sample_feasible_overlap(universe_size, m1, m2, overlap_rng);
        RngStream set_rng = root.derive("sets");
        const auto [c1, c2] = sample_channel_sets(universe_size, m1, m2, overlap, set_rng);

        RngStream seq_rng = root.derive("sequences");
        const ElementarySequence one_over_c1 = zero_one_es(c1, 1, seq_rng);
        const ElementarySequence zero_over_c2 = zero_one_es(c2, 0, seq_rng);
        const ElementarySequence one_over_c2 = zero_one_es(c2, 1, seq_rng);
        const ElementarySequence zero_over_c1 = zero_one_es(c1, 0, seq_rng);

        std::ostringstream context;
        context << "seed=" << seed << " C1=" << describe_set(c1) << " C2=" << describe_set(c2);

        sweep_elementary_direction(one_over_c1, zero_over_c2, report.bound, report,
                                   report.worst_observed_ttr, context.str() + " dir=nominal");
        sweep_elementary_direction(one_over_c2, zero_over_c1, swapped_bound, report,
                                   swapped_worst, context.str() + " dir=swapped");
        ++report.trials;
    }
    return report;
}

BoundReport verify_theorem2(int M, int m1, int m2, const std::vector<std::uint64_t>& rng_seeds,
                            bool exhaustive_sets) {
    require_sizes(M, m1, m2);

    const std::uint64_t bound = theorem2_bound(M, m1, m2);
    const auto round_len = static_cast<std::uint64_t>(6 * ceil_log2(M) + 1);
    const auto p1 = static_cast<std::uint64_t>(smallest_prime_at_least(m1));
    const std::uint64_t equal_stay_bound = 2 * p1 * round_len;
    const bool exhaustive = exhaustive_sets && M <= 8;
    constexpr int kSampledPairsPerSeed = 3;

    BoundReport report;
    report.pass = true;
    report.bound = bound;
    {
        std::ostringstream description;
        description << "schedule MTTR bound, M=" << M << " m1=" << m1 << " m2=" << m2
                    << " seeds=" << rng_seeds.size() << (exhaustive ? " (all set pairs)" : "");
        report.description = description.str();
    }

    const auto exhaustive_pairs =
        exhaustive ? enumerate_intersecting_pairs(M, m1, m2)
                   : std::vector<std::pair<ChannelSet, ChannelSet>>{};

    auto fail = [&report](const std::string& witness) {
        report.pass = false;
        if (report.witness.empty()) {
            report.witness = witness;
        }
    };

    for (std::uint64_t seed : rng_seeds) {
        RngStream root(seed);

        std::vector<std::pair<ChannelSet, ChannelSet>> pairs;
        if (exhaustive) {
            pairs = exhaustive_pairs;
        } else {
            for (int k = 0; k < kSampledPairsPerSeed; ++k) {
                RngStream pair_rng = root.derive("sampled-sets").derive(static_cast<std::uint64_t>(k));
                const int overlap = sample_feasible_overlap(M, m1, m2, pair_rng);
                pairs.push_back(sample_channel_sets(M, m1, m2, overlap, pair_rng));
            }
        }

        for (std::size_t pair_index = 0; pair_index < pairs.size(); ++pair_index) {
            const ChannelSet& c1 = pairs[pair_index].first;
            const ChannelSet& c2 = pairs[pair_index].second;
            RngStream pair_rng = root.derive("pair").derive(pair_index);

            for (const bool equal_stay : {false, true}) {
                ChannelId stay1 = 0;
                ChannelId stay2 = 0;
                if (equal_stay) {
                    const std::vector<ChannelId> common = intersect(c1, c2);
                    RngStream stay_rng = pair_rng.derive("equal-stay");
                    stay1 = stay2 = common[stay_rng.next_below(common.size())];
                } else {
                    std::vector<std::pair<ChannelId, ChannelId>> choices;
                    for (ChannelId a : c1.members()) {
                        for (ChannelId b : c2.members()) {
                            if (a != b) {
                                choices.emplace_back(a, b);
                            }
                        }
                    }
                    if (choices.empty()) {
                        // Identical singleton sets cannot produce distinct stays.
                        ++report.regime_skips;
                        continue;
                    }
                    RngStream stay_rng = pair_rng.derive("distinct-stay");
                    const auto pick = choices[stay_rng.next_below(choices.size())];
                    stay1 = pick.first;
                    stay2 = pick.second;
                }

                const char* regime = equal_stay ? "equal" : "distinct";
                RngStream rng1 = pair_rng.derive(regime).derive("user1");
                RngStream rng2 = pair_rng.derive(regime).derive("user2");
                const ZosSchedule user1 = ZosSchedule::generate(M, c1, rng1, stay1);
                const ZosSchedule user2 = ZosSchedule::generate(M, c2, rng2, stay2);

                std::ostringstream context;
                context << "seed=" << seed << " C1=" << describe_set(c1)
                        << " C2=" << describe_set(c2) << " s1=" << stay1 << " s2=" << stay2;

                for (std::uint64_t offset = 0; offset <= bound; ++offset) {
                    const RendezvousResult result = simulate_pair(user1, user2, offset, bound);
                    ++report.offsets_checked;
                    if (!result.met()) {
                        std::ostringstream witness;
                        witness << context.str() << " offset=" << offset
                                << " no rendezvous within " << bound;
                        fail(witness.str());
                        break;
                    }
                    const std::uint64_t ttr = result.meeting->ttr;
                    report.worst_observed_ttr = std::max(report.worst_observed_ttr, ttr);
                    if (equal_stay && ttr > equal_stay_bound) {
                        std::ostringstream witness;
                        witness << context.str() << " offset=" << offset << " ttr=" << ttr
                                << " exceeds equal-stay limit " << equal_stay_bound;
                        fail(witness.str());
                    }
                    if (equal_stay && offset % round_len == 0 && ttr > round_len) {
                        std::ostringstream witness;
                        witness << context.str() << " offset=" << offset << " ttr=" << ttr
                                << " exceeds round-aligned limit " << round_len;
                        fail(witness.str());
                    }
                }
                ++report.trials;
            }
        }
    }
    return report;
}

BoundReport verify_theorem2_sampled(int M, std::uint64_t seed, int num_configs) {
    if (num_configs < 1) {
        throw std::invalid_argument("verify_theorem2_sampled: need at least one configuration");
    }
    const auto round_len = static_cast<std::uint64_t>(6 * ceil_log2(M) + 1);

    BoundReport report;
    report.pass = true;
    {
        std::ostringstream description;
        description << "schedule MTTR bound, M=" << M << ", " << num_configs
                    << " random configurations";
        report.description = description.str();
    }

    RngStream root(seed);
    for (int config = 0; config < num_configs; ++config) {
        RngStream rng = root.derive(static_cast<std::uint64_t>(config));
        const int m1 = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(M)));
        const int m2 = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(M)));
        const int overlap = sample_feasible_overlap(M, m1, m2, rng);
        const auto [c1, c2] = sample_channel_sets(M, m1, m2, overlap, rng);

        const ChannelId stay1 = c1.members()[rng.next_below(c1.members().size())];
        const ChannelId stay2 = c2.members()[rng.next_below(c2.members().size())];

        const std::uint64_t bound = theorem2_bound(M, m1, m2);
        report.bound = std::max(report.bound, bound);
        const std::uint64_t offset = rng.next_below(bound + 1);

        RngStream rng1 = rng.derive("user1");
        RngStream rng2 = rng.derive("user2");
        const ZosSchedule user1 = ZosSchedule::generate(M, c1, rng1, stay1);
        const ZosSchedule user2 = ZosSchedule::generate(M, c2, rng2, stay2);

        const RendezvousResult result = simulate_pair(user1, user2, offset, bound);
        ++report.offsets_checked;
        ++report.trials;

        std::ostringstream context;
        context << "config=" << config << " C1=" << describe_set(c1)
                << " C2=" << describe_set(c2) << " s1=" << stay1 << " s2=" << stay2
                << " offset=" << offset;

        if (!result.met()) {
            report.pass = false;
            if (report.witness.empty()) {
                report.witness = context.str() + " no rendezvous within bound";
            }
            continue;
        }
        const std::uint64_t ttr = result.meeting->ttr;
        report.worst_observed_ttr = std::max(report.worst_observed_ttr, ttr);
        if (stay1 == stay2) {
            const auto p1 = static_cast<std::uint64_t>(smallest_prime_at_least(m1));
            if (ttr > 2 * p1 * round_len || (offset % round_len == 0 && ttr > round_len)) {
                report.pass = false;
                if (report.witness.empty()) {
                    report.witness = context.str() + " equal-stay limit exceeded";
                }
            }
        }
    }
    return report;
}

bool check_seed_window_distinctness(int M) {
    const int L = ceil_log2(M);
    const int window = 3 * L;
    for (ChannelId s1 = 1; s1 <= M; ++s1) {
        for (ChannelId s2 = s1 + 1; s2 <= M; ++s2) {
            const Seed seed1 = build_seed(M, s1);
            const Seed seed2 = build_seed(M, s2);
            // Window starts range over the first half of the 6L-bit prefix.
            for (int i = 0; i < window; ++i) {
                for (int j = 0; j < window; ++j) {
                    bool differs = false;
                    for (int k = 0; k < window; ++k) {
                        if (seed1.symbols[static_cast<std::size_t>(i + k)] !=
                            seed2.symbols[static_cast<std::size_t>(j + k)]) {
                            differs = true;
                            break;
                        }
                    }
                    if (!differs) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace zos
