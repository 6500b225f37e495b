#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "dtg/tournament.hpp"

namespace dtg {

// Probability that a fixed increasing 7-subset of a random tournament T(n,p)
// induces the parity tournament on 7 vertices. Computed from the board, not
// hard-coded: one factor p per low-to-high edge, 1-p per high-to-low edge.
double copy_probability(double p);

// Orientation split of those 21 pairs (low-to-high count, high-to-low count).
std::pair<int, int> parity7_orientation_counts();

// C(n,7) * copy_probability(p); 0 for n < 7.
double expected_copies(int n, double p);

// Lexicographically first increasing 7-tuple inducing the parity-7 pattern.
std::optional<std::array<int, 7>> find_embedding(const Tournament& t);

// Number of such tuples by exhaustive subset scan (small n only).
long long count_embeddings(const Tournament& t);

struct McEstimate {
    int trials = 0;
    int successes = 0;
    int unknowns = 0;
    double estimate = 0.0;
    double ci_low = 0.0;  // 95% Wilson interval
    double ci_high = 0.0;
    uint64_t master_seed = 0;
};

// Fraction of sampled T(n,p) containing an embedded parity-7 copy.
McEstimate mc_embedding_probability(int n, double p, int trials, uint64_t seed, int jobs = 1);

// Per trial: find a copy, then certify Maker's restricted strategy against
// every Breaker reply under a node budget. Budget-exhausted trials count as
// unknowns, never as wins.
McEstimate mc_maker_win(int n, double p, int trials, uint64_t seed,
                        uint64_t per_trial_budget = 10'000'000ull, int jobs = 1);

} // namespace dtg
