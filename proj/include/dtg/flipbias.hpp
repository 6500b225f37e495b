#pragma once

#include <vector>

#include "dtg/tournament.hpp"

namespace dtg {

// Breaker's preemptive flipping schedule turning the odd parity tournament
// into the transitive one: phase i flips the incoming same-parity edges of
// vertex i, highest source first.
struct FlipPlan {
    int n = 0;
    std::vector<DirectedEdge> flips; // oriented as before flipping
    std::vector<int> deltas;         // triangles removed by each flip
    std::vector<int> phase_lengths;  // phases 1..n-2

    int total() const { return static_cast<int>(flips.size()); }
};

FlipPlan build_flip_plan(int n); // n odd, n >= 3

// Triangles remaining after the first k flips: w(n) - F(k).
long long triangles_after(const FlipPlan& plan, int k);

// Closed-form flip count (n-1)^2/4 - 3 from the winning-set-count criterion.
long long kappa_upper_paper(int n);

// Replay oracle: least k along the plan leaving at most 3 triangles.
long long kappa_upper_exact(int n);

// Replay oracle: largest k keeping the remaining-triangle count above C(n,2)
// (0 when even the unflipped board fails the criterion).
long long kappa_lower_exact(int n);

// n^2/4 - (3/2)^(2/3) n^(4/3); the O(n) term of the asymptotic is dropped.
double kappa_lower_paper_asymptotic(int n);

// Block walk over the reversed delta sequence: blocks k = 1,2,... of shape
// (k,...,1) twice, cumulative sums S_Z = Z(Z+1)(Z+2)/3 and lengths
// L_Z = Z(Z+1); x is the least reversed-flip count whose cumulative removal
// exceeds N = C(n,2).
struct BlockDecomposition {
    long long n = 0;
    long long N = 0;       // C(n,2)
    long long K = 0;       // S_K <= N < S_{K+1}
    long long r_next = 0;  // extra flips taken inside block K+1
    long long x = 0;       // L_K + r_next
    std::vector<int> reverse_deltas;

    static long long S(long long Z) { return Z * (Z + 1) * (Z + 2) / 3; }
    static long long L(long long Z) { return Z * (Z + 1); }
};

BlockDecomposition block_decomposition(int n);

} // namespace dtg
