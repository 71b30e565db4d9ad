// Command-line front end: generate schedules, simulate pairs, run the
// bound verifiers, and drive Monte-Carlo experiments.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zos/bench.hpp"
#include "zos/channel_set.hpp"
#include "zos/primes.hpp"
#include "zos/rng.hpp"
#include "zos/schedule.hpp"
#include "zos/sim.hpp"
#include "zos/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;

std::vector<std::uint64_t> seed_range(std::uint64_t count, std::uint64_t first) {
    std::vector<std::uint64_t> seeds(count);
    std::iota(seeds.begin(), seeds.end(), first);
    return seeds;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) {
        return std::cout;
    }
    file.open(path);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    return file;
}

struct GenerateOptions {
    int channels = 0;
    std::vector<int> available;
    std::uint64_t seed = 1;
    int stay = 0; // 0 = random
    std::string out;
};

int run_generate(const GenerateOptions& options) {
    const zos::ChannelSet available(options.channels, options.available);
    zos::RngStream rng(options.seed);
    const std::optional<zos::ChannelId> stay =
        options.stay > 0 ? std::optional<zos::ChannelId>(options.stay) : std::nullopt;
    const zos::ZosSchedule schedule =
        zos::ZosSchedule::generate(options.channels, available, rng, stay);

    std::ofstream file;
    open_sink(options.out, file) << zos::format_schedule(schedule);
    return kExitOk;
}

struct SimulateOptions {
    int channels = 0;
    std::vector<int> available1;
    std::vector<int> available2;
    std::uint64_t seed = 1;
    std::uint64_t offset = 0;
    std::uint64_t horizon = 0; // 0 = theorem2_bound + 1
    int stay1 = 0;
    int stay2 = 0;
    std::string algo = "zos";
};

int run_simulate(const SimulateOptions& options) {
    const zos::ChannelSet c1(options.channels, options.available1);
    const zos::ChannelSet c2(options.channels, options.available2);
    const std::uint64_t horizon =
        options.horizon > 0
            ? options.horizon
            : zos::theorem2_bound(options.channels, c1.size(), c2.size()) + 1;

    zos::RngStream root(options.seed);
    zos::RngStream rng1 = root.derive("user1");
    zos::RngStream rng2 = root.derive("user2");

    zos::RendezvousResult result;
    if (options.algo == "zos") {
        const auto stay1 =
            options.stay1 > 0 ? std::optional<zos::ChannelId>(options.stay1) : std::nullopt;
        const auto stay2 =
            options.stay2 > 0 ? std::optional<zos::ChannelId>(options.stay2) : std::nullopt;
        const zos::ZosSchedule user1 =
            zos::ZosSchedule::generate(options.channels, c1, rng1, stay1);
        const zos::ZosSchedule user2 =
            zos::ZosSchedule::generate(options.channels, c2, rng2, stay2);
        std::cout << "user1 stay=" << user1.seed().stay_channel << "\n";
        std::cout << "user2 stay=" << user2.seed().stay_channel << "\n";
        result = zos::simulate_pair(user1, user2, options.offset, horizon);
    } else if (options.algo == "random-baseline") {
        const zos::BaselineSchedule user1(options.channels, c1, rng1);
        const zos::BaselineSchedule user2(options.channels, c2, rng2);
        result = zos::simulate_pair(user1, user2, options.offset, horizon);
    } else {
        throw std::invalid_argument("unknown algorithm: " + options.algo);
    }

    if (result.met()) {
        std::cout << "met ttr=" << result.meeting->ttr << " channel=" << result.meeting->channel
                  << "\n";
    } else {
        std::cout << "timeout horizon=" << result.horizon << "\n";
    }
    return kExitOk;
}

struct VerifyOptions {
    std::uint64_t seed = 1;
    bool full = false;
};

int run_verify(const VerifyOptions& options) {
    bool all_pass = true;
    auto gate = [&all_pass](bool pass, const std::string& line) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << line << "\n";
        all_pass = all_pass && pass;
    };

    {
        bool bertrand = true;
        for (int m = 1; m <= 10'000 && bertrand; ++m) {
            const int p = zos::smallest_prime_at_least(m);
            bertrand = p >= m && p <= 2 * m;
        }
        gate(bertrand, "prime selection stays within [m, 2m] for m <= 10^4");
    }
    {
        bool aligned = true;
        for (int p = 1; p <= 30 && aligned; ++p) {
            for (int q = 1; q <= 30; ++q) {
                if (std::gcd(p, q) == 1 && !zos::check_crt_alignment(p, q)) {
                    aligned = false;
                    break;
                }
            }
        }
        gate(aligned, "coprime cycles align all item pairs up to 30");
    }
    {
        bool distinct = true;
        for (int M = 2; M <= 16 && distinct; ++M) {
            distinct = zos::check_seed_window_distinctness(M);
        }
        gate(distinct, "seed 3L-windows distinct for M in [2,16]");
    }

    const int t1_max = options.full ? 6 : 4;
    const auto t1_seeds = seed_range(options.full ? 25 : 10, options.seed);
    for (int m1 = 1; m1 <= t1_max; ++m1) {
        for (int m2 = 1; m2 <= t1_max; ++m2) {
            const zos::BoundReport report = zos::verify_theorem1(m1, m2, t1_seeds, 8);
            std::cout << report << "\n";
            all_pass = all_pass && report.pass;
        }
    }

    const auto t2_seeds = seed_range(options.full ? 10 : 3, options.seed);
    const std::vector<int> universes = options.full ? std::vector<int>{2, 3, 4}
                                                    : std::vector<int>{2, 3};
    for (int M : universes) {
        for (int m1 = 1; m1 <= M; ++m1) {
            for (int m2 = 1; m2 <= M; ++m2) {
                const zos::BoundReport report = zos::verify_theorem2(M, m1, m2, t2_seeds, true);
                std::cout << report << "\n";
                all_pass = all_pass && report.pass;
            }
        }
    }

    {
        const zos::BoundReport sampled =
            zos::verify_theorem2_sampled(16, options.seed, options.full ? 1000 : 200);
        std::cout << sampled << "\n";
        all_pass = all_pass && sampled.pass;
    }

    std::cout << (all_pass ? "verification passed" : "verification FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

struct ExperimentOptions {
    int channels = 100;
    std::vector<double> thetas = {0.1, 0.2, 0.3, 0.4, 0.5};
    int common = 6;
    int trials = 5000;
    std::uint64_t seed = 1;
    std::uint64_t horizon = 0;
    std::vector<std::string> algos = {"zos", "random-baseline"};
    std::string out;
};

int run_experiment_cmd(const ExperimentOptions& options) {
    std::vector<zos::Algorithm> algorithms;
    for (const std::string& name : options.algos) {
        if (name == "zos") {
            algorithms.push_back(zos::Algorithm::Zos);
        } else if (name == "random-baseline") {
            algorithms.push_back(zos::Algorithm::RandomBaseline);
        } else {
            throw std::invalid_argument("unknown algorithm: " + name);
        }
    }

    std::vector<zos::TtrStats> rows;
    for (double theta : options.thetas) {
        zos::ExperimentConfig config;
        config.channels = options.channels;
        config.theta = theta;
        config.common_channels = options.common;
        config.trials = options.trials;
        config.master_seed = options.seed;
        config.horizon = options.horizon;
        config.algorithms = algorithms;
        const auto stats = zos::run_experiment(config);
        rows.insert(rows.end(), stats.begin(), stats.end());
    }

    std::ofstream file;
    zos::emit_csv(rows, open_sink(options.out, file));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ZOS channel-hopping rendezvous toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Key=value file; subcommand options go under a [subcommand] section");

    GenerateOptions generate;
    CLI::App* generate_cmd = app.add_subcommand("generate", "Print one ZOS hopping schedule");
    generate_cmd->add_option("--channels", generate.channels, "Whole-set size M")->required();
    generate_cmd->add_option("--available", generate.available, "Available channel indices")
        ->required()
        ->delimiter(',');
    generate_cmd->add_option("--seed", generate.seed, "Rng seed");
    generate_cmd->add_option("--stay", generate.stay, "Force the stay channel");
    generate_cmd->add_option("--out", generate.out, "Output path (default stdout)");

    SimulateOptions simulate;
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Simulate one pair at a fixed offset");
    simulate_cmd->add_option("--channels", simulate.channels, "Whole-set size M")->required();
    simulate_cmd->add_option("--available1", simulate.available1, "User 1 channels")
        ->required()
        ->delimiter(',');
    simulate_cmd->add_option("--available2", simulate.available2, "User 2 channels")
        ->required()
        ->delimiter(',');
    simulate_cmd->add_option("--seed", simulate.seed, "Rng seed");
    simulate_cmd->add_option("--offset", simulate.offset, "Slots by which user 2 leads");
    simulate_cmd->add_option("--horizon", simulate.horizon, "Max slots (0 = bound + 1)");
    simulate_cmd->add_option("--stay1", simulate.stay1, "Force user 1 stay channel");
    simulate_cmd->add_option("--stay2", simulate.stay2, "Force user 2 stay channel");
    simulate_cmd->add_option("--algo", simulate.algo, "zos or random-baseline");

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the bound-verification gates");
    verify_cmd->add_option("--seed", verify.seed, "Base rng seed");
    verify_cmd->add_flag("--full", verify.full, "Acceptance-scale sweep sizes");

    ExperimentOptions experiment;
    CLI::App* experiment_cmd =
        app.add_subcommand("experiment", "Monte-Carlo TTR sweep, CSV output");
    experiment_cmd->add_option("--channels", experiment.channels, "Whole-set size M");
    experiment_cmd->add_option("--theta", experiment.thetas, "Available fractions")
        ->delimiter(',');
    experiment_cmd->add_option("--common", experiment.common, "Common channels G");
    experiment_cmd->add_option("--trials", experiment.trials, "Trials per theta");
    experiment_cmd->add_option("--seed", experiment.seed, "Master seed");
    experiment_cmd->add_option("--horizon", experiment.horizon, "Max slots (0 = bound + 1)");
    experiment_cmd->add_option("--algo", experiment.algos, "Algorithms to run")->delimiter(',');
    experiment_cmd->add_option("--out", experiment.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadConfig;
    }

    try {
        if (*generate_cmd) {
            return run_generate(generate);
        }
        if (*simulate_cmd) {
            return run_simulate(simulate);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
        if (*experiment_cmd) {
            return run_experiment_cmd(experiment);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    return kExitBadConfig;
}
