#include "zos/bench.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "zos/sampling.hpp"
#include "zos/schedule.hpp"
#include "zos/sim.hpp"
#include "zos/verify.hpp"

namespace zos {

namespace {

struct RunningStats {
    std::uint64_t ttr_sum = 0;
    std::uint64_t met = 0;
    std::uint64_t max_ttr = 0;
    std::uint64_t timeouts = 0;

    void record(const RendezvousResult& result) {
        if (result.met()) {
            ++met;
            ttr_sum += result.meeting->ttr;
            max_ttr = std::max(max_ttr, result.meeting->ttr);
        } else {
            ++timeouts;
        }
    }
};

void validate(const ExperimentConfig& config) {
    if (config.channels < 2) {
        throw std::invalid_argument("experiment: need at least two channels");
    }
    if (config.theta <= 0.0 || config.theta > 1.0) {
        throw std::invalid_argument("experiment: theta must lie in (0, 1]");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("experiment: need at least one trial");
    }
    if (config.algorithms.empty()) {
        throw std::invalid_argument("experiment: no algorithms selected");
    }
    const int per_user = static_cast<int>(std::lround(config.theta * config.channels));
    if (config.common_channels < 1 || config.common_channels > per_user) {
        throw std::invalid_argument("experiment: common-channel count incompatible with theta");
    }
    if (2 * per_user - config.common_channels > config.channels) {
        throw std::invalid_argument("experiment: set geometry does not fit in the whole set");
    }
}

} // namespace

std::string algorithm_label(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::Zos:
        return "zos";
    case Algorithm::RandomBaseline:
        return "random-baseline";
    }
    throw std::logic_error("algorithm_label: unknown algorithm");
}

std::vector<TtrStats> run_experiment(const ExperimentConfig& config) {
    validate(config);
    const int M = config.channels;
    const int per_user = static_cast<int>(std::lround(config.theta * M));
    const std::uint64_t bound = theorem2_bound(M, per_user, per_user);
    const std::uint64_t horizon = config.horizon > 0 ? config.horizon : bound + 1;

    std::vector<RunningStats> per_algorithm(config.algorithms.size());
    const RngStream master(config.master_seed);

    for (int trial = 0; trial < config.trials; ++trial) {
        RngStream trial_rng = master.derive("trial").derive(static_cast<std::uint64_t>(trial));

        RngStream set_rng = trial_rng.derive("sets");
        const auto [c1, c2] =
            sample_channel_sets(M, per_user, per_user, config.common_channels, set_rng);
        RngStream offset_rng = trial_rng.derive("offset");
        const std::uint64_t offset = offset_rng.next_below(bound);

        for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
            RngStream rng1 = trial_rng.derive(algorithm_label(config.algorithms[a])).derive("user1");
            RngStream rng2 = trial_rng.derive(algorithm_label(config.algorithms[a])).derive("user2");
            RendezvousResult result;
            switch (config.algorithms[a]) {
            case Algorithm::Zos: {
                const ZosSchedule user1 = ZosSchedule::generate(M, c1, rng1);
                const ZosSchedule user2 = ZosSchedule::generate(M, c2, rng2);
                result = simulate_pair(user1, user2, offset, horizon);
                break;
            }
            case Algorithm::RandomBaseline: {
                const BaselineSchedule user1(M, c1, rng1);
                const BaselineSchedule user2(M, c2, rng2);
                result = simulate_pair(user1, user2, offset, horizon);
                break;
            }
            }
            per_algorithm[a].record(result);
        }
    }

    std::vector<TtrStats> stats;
    stats.reserve(config.algorithms.size());
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        const RunningStats& run = per_algorithm[a];
        TtrStats entry;
        entry.algorithm = algorithm_label(config.algorithms[a]);
        entry.theta = config.theta;
        entry.trials = config.trials;
        entry.average_ttr =
            run.met > 0 ? static_cast<double>(run.ttr_sum) / static_cast<double>(run.met) : 0.0;
        entry.max_ttr = run.max_ttr;
        entry.timeout_count = run.timeouts;
        stats.push_back(std::move(entry));
    }
    return stats;
}

void emit_csv(const std::vector<TtrStats>& stats, std::ostream& out) {
    out << "algorithm,theta,trials,avg_ttr,max_ttr,timeouts\n";
    char buffer[64];
    for (const TtrStats& row : stats) {
        std::snprintf(buffer, sizeof(buffer), "%.3f", row.theta);
        out << row.algorithm << ',' << buffer << ',' << row.trials << ',';
        std::snprintf(buffer, sizeof(buffer), "%.3f", row.average_ttr);
        out << buffer << ',' << row.max_ttr << ',' << row.timeout_count << '\n';
    }
}

} // namespace zos
