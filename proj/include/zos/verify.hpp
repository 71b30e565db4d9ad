#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zos {

// Outcome of one bound-verification sweep. `witness` holds replay
// coordinates (seed, set pair, stay channels, offset) for the first
// violation found; it is empty on a pass.
struct BoundReport {
    std::string description;
    std::uint64_t bound = 0;
    std::uint64_t worst_observed_ttr = 0;
    std::uint64_t offsets_checked = 0;
    std::uint64_t trials = 0;
    std::uint64_t regime_skips = 0;
    bool pass = false;
    std::string witness;
};

std::ostream& operator<<(std::ostream& out, const BoundReport& report);

// Rendezvous bound for a 1-type sequence over m1 channels cycled against a
// 0-type sequence over m2 channels: 2(P1+1)P2.
std::uint64_t theorem1_bound(int m1, int m2);

// MTTR bound for two full schedules: (12L+2)(P1*P2 + max{P1, P2}) with
// L = ceil(log2 M). Always at most the looser form
// (24L+4)(2*m1*m2 + max{m1, m2}), which is asserted internally.
std::uint64_t theorem2_bound(int M, int m1, int m2);

// Brute-force check of the coprime-cycle alignment fact: repeating
// <u_1..u_p> q times alongside <v_1..v_q> p times hits every (u_i, v_j)
// pair at some common position k <= p*q. Requires gcd(p, q) = 1.
bool check_crt_alignment(int p, int q);

// Sweeps every offset of a 1-type sequence over a sampled C1 against a
// 0-type sequence over a sampled C2 (one set pair per rng seed) and checks
// the observed TTR against theorem1_bound. The report's bound and
// worst_observed_ttr describe the nominal direction (1-type over C1); the
// role-swapped direction is swept as well against its own bound and any
// violation fails the report.
BoundReport verify_theorem1(int m1, int m2, const std::vector<std::uint64_t>& rng_seeds,
                            int universe_size);

// Sweeps full ZOS/ZOS pairs over every offset in [0, theorem2_bound] with
// horizon equal to the bound, for both stay-channel regimes (forced
// distinct / forced equal). Set pairs are enumerated exhaustively when
// exhaustive_sets is set and M <= 8, otherwise sampled per seed. The
// equal-stay regime additionally checks the sharper limits
// TTR <= 2*P1*(6L+1), and TTR <= 6L+1 at round-aligned offsets.
BoundReport verify_theorem2(int M, int m1, int m2, const std::vector<std::uint64_t>& rng_seeds,
                            bool exhaustive_sets);

// Randomized spot check of the MTTR bound at larger M: each configuration
// draws set sizes, a set pair, stay channels, and a single offset in
// [0, bound], then simulates with horizon equal to the bound.
BoundReport verify_theorem2_sampled(int M, std::uint64_t seed, int num_configs);

// Exhaustively verifies, for one universe size, that any two seeds built
// from distinct stay channels differ inside every pair of 3L-long windows
// of their binary prefixes.
bool check_seed_window_distinctness(int M);

} // namespace zos
