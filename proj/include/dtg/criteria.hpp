#pragma once

#include <cstdint>

namespace dtg {

// Breaker wins the unbiased game whenever the number of s-element winning
// sets is below 2^(s-1) (Maker moving first).
bool erdos_selfridge_breaker(long long num_sets, int set_size);

// Potential criterion for Maker's win in the (a:b) biased game:
// numSets * ((a+b)/a)^(-setSize) > a^2 b^2 / (a+b)^3 * delta2 * boardSize.
// Evaluated in exact integer arithmetic.
bool beck_maker_biased(long long a, long long b, long long num_sets, int set_size,
                       long long delta2, long long board_size);

// sqrt(w(n) / C(n,2)); for odd n this equals sqrt((n+1)/12). Maker wins the
// (1:b) game for every b strictly below this value.
double bias_lower_bound(int n);

// sqrt((8/3) n), the o(1) term dropped; an asymptotic sufficient condition
// for Breaker, transferred from the undirected triangle game.
double bias_upper_bound_glazik(int n);

} // namespace dtg
