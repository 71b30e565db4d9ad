#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zos {

enum class Algorithm { Zos, RandomBaseline };

std::string algorithm_label(Algorithm algorithm);

// One Monte-Carlo sweep at a fixed available-set fraction theta. Each user
// gets round(theta * channels) available channels per trial, with exactly
// common_channels shared. horizon = 0 picks theorem2_bound + 1 for the
// trial geometry, so a ZOS timeout would be a bound violation.
struct ExperimentConfig {
    int channels = 100;
    double theta = 0.1;
    int common_channels = 6;
    int trials = 5000;
    std::uint64_t master_seed = 1;
    std::vector<Algorithm> algorithms = {Algorithm::Zos, Algorithm::RandomBaseline};
    std::uint64_t horizon = 0;
};

// Aggregate TTR statistics for one algorithm at one theta. average_ttr and
// max_ttr cover the trials that met; timeouts are counted separately.
struct TtrStats {
    std::string algorithm;
    double theta = 0.0;
    int trials = 0;
    double average_ttr = 0.0;
    std::uint64_t max_ttr = 0;
    std::uint64_t timeout_count = 0;
};

// Runs config.trials independent trials, one TtrStats per algorithm.
// Per trial: sample the set pair, draw a uniform offset in
// [0, theorem2_bound), build one schedule per user per algorithm from
// labeled substreams, and simulate. Fully deterministic in master_seed.
std::vector<TtrStats> run_experiment(const ExperimentConfig& config);

// Writes "algorithm,theta,trials,avg_ttr,max_ttr,timeouts" then one row
// per entry; theta and avg_ttr are printed with 3 decimal places.
void emit_csv(const std::vector<TtrStats>& stats, std::ostream& out);

} // namespace zos
