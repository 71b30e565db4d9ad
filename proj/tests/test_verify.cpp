#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <vector>

#include "zos/schedule.hpp"
#include "zos/sim.hpp"
#include "zos/verify.hpp"

using namespace zos;

namespace {

std::vector<std::uint64_t> seed_range(std::uint64_t count, std::uint64_t first = 1) {
    std::vector<std::uint64_t> seeds(count);
    std::iota(seeds.begin(), seeds.end(), first);
    return seeds;
}

} // namespace

TEST_CASE("theorem1_bound evaluates 2(P1+1)P2") {
    CHECK(theorem1_bound(2, 2) == 12);
    CHECK(theorem1_bound(1, 1) == 12); // P = 2 for singleton sets
    CHECK(theorem1_bound(3, 5) == 40);
    CHECK(theorem1_bound(5, 3) == 36); // asymmetric by construction
}

TEST_CASE("theorem2_bound evaluates (12L+2)(P1P2+max)") {
    CHECK(theorem2_bound(3, 2, 2) == 156);
    CHECK(theorem2_bound(100, 10, 10) == 11352);
    CHECK_THROWS_AS(theorem2_bound(4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_bound(4, 0, 2), std::invalid_argument);
}

TEST_CASE("theorem2_bound dominates one round for every small geometry") {
    for (int M = 2; M <= 20; ++M) {
        for (int m1 = 1; m1 <= M; ++m1) {
            for (int m2 = 1; m2 <= M; ++m2) {
                const auto round = static_cast<std::uint64_t>(6 * ceil_log2(M) + 1);
                CHECK(theorem2_bound(M, m1, m2) >= round);
            }
        }
    }
}

TEST_CASE("coprime cycles align every item pair") {
    CHECK(check_crt_alignment(2, 3));
    CHECK(check_crt_alignment(1, 1));
    CHECK(check_crt_alignment(5, 7));
    CHECK_THROWS_AS(check_crt_alignment(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(check_crt_alignment(0, 3), std::invalid_argument);

    for (int p = 1; p <= 12; ++p) {
        for (int q = 1; q <= 12; ++q) {
            if (std::gcd(p, q) == 1) {
                CHECK(check_crt_alignment(p, q));
            }
        }
    }
}

TEST_CASE("verify_theorem1 passes its worked example") {
    const BoundReport report = verify_theorem1(2, 2, seed_range(50), 4);
    CHECK(report.pass);
    CHECK(report.bound == 12);
    CHECK(report.worst_observed_ttr <= 12);
    CHECK(report.trials == 50);
    CHECK(report.witness.empty());
}

TEST_CASE("verify_theorem1 on identical singletons observes ttr 1") {
    const BoundReport report = verify_theorem1(1, 1, seed_range(10), 4);
    CHECK(report.pass);
    CHECK(report.worst_observed_ttr == 1);
}

TEST_CASE("passing reports keep the worst case under the bound") {
    for (int m1 : {1, 2, 3}) {
        for (int m2 : {1, 2, 3}) {
            const BoundReport report = verify_theorem1(m1, m2, seed_range(5), 6);
            REQUIRE(report.pass);
            CHECK(report.worst_observed_ttr <= report.bound);
            CHECK(report.offsets_checked > 0);
        }
    }
}

TEST_CASE("verify_theorem2 passes exhaustively at M=3") {
    const BoundReport report = verify_theorem2(3, 2, 2, seed_range(2), true);
    CHECK(report.pass);
    CHECK(report.bound == 156);
    CHECK(report.worst_observed_ttr <= 156);
    CHECK(report.witness.empty());
    CHECK(report.trials > 0);
}

TEST_CASE("verify_theorem2 skips the distinct-stay regime only for twin singletons") {
    const BoundReport report = verify_theorem2(2, 1, 1, seed_range(2), true);
    CHECK(report.pass);
    // Intersecting singleton pairs at M=2: ({1},{1}) and ({2},{2}), per seed.
    CHECK(report.regime_skips == 4);
}

TEST_CASE("verify_theorem2 samples set pairs when not exhaustive") {
    const BoundReport report = verify_theorem2(10, 3, 4, seed_range(2), false);
    CHECK(report.pass);
    CHECK(report.trials == 2 * 3 * 2); // seeds * sampled pairs * regimes
}

TEST_CASE("verify_theorem2_sampled spot checks a larger universe") {
    const BoundReport report = verify_theorem2_sampled(16, 99, 60);
    CHECK(report.pass);
    CHECK(report.trials == 60);
    CHECK(report.worst_observed_ttr <= report.bound);
}

TEST_CASE("seed windows of distinct stay channels never collide") {
    for (int M = 2; M <= 16; ++M) {
        CHECK(check_seed_window_distinctness(M));
    }
}

TEST_CASE("full-period offset sweep at M=2 meets within the bound everywhere") {
    // Every intersecting pair of available sets over two channels; the joint
    // schedule period is small enough to sweep outright.
    const std::vector<std::vector<ChannelId>> subsets = {{1}, {2}, {1, 2}};
    for (const auto& members1 : subsets) {
        for (const auto& members2 : subsets) {
            const ChannelSet c1(2, members1);
            const ChannelSet c2(2, members2);
            if (intersect(c1, c2).empty()) {
                continue;
            }
            RngStream rng1(501);
            RngStream rng2(502);
            const ZosSchedule user1 = ZosSchedule::generate(2, c1, rng1);
            const ZosSchedule user2 = ZosSchedule::generate(2, c2, rng2);

            std::uint64_t cycle = 1;
            for (const ZosSchedule* schedule : {&user1, &user2}) {
                for (const auto& column : schedule->columns()) {
                    cycle = std::lcm(cycle, static_cast<std::uint64_t>(column.items.size()));
                }
            }
            const std::uint64_t period = cycle * static_cast<std::uint64_t>(user1.round_length());
            const std::uint64_t bound =
                theorem2_bound(2, c1.size(), c2.size());
            for (std::uint64_t offset = 0; offset < period; ++offset) {
                const RendezvousResult result = simulate_pair(user1, user2, offset, bound);
                REQUIRE(result.met());
            }
        }
    }
}

TEST_CASE("reports print a single status line") {
    const BoundReport report = verify_theorem1(1, 2, seed_range(2), 4);
    std::ostringstream out;
    out << report;
    const std::string line = out.str();
    CHECK(line.find("[PASS]") == 0);
    CHECK(line.find("bound") != std::string::npos);
}
