#include "dtg/criteria.hpp"

#include <cmath>
#include <stdexcept>

#include "dtg/tournament.hpp"

namespace dtg {

bool erdos_selfridge_breaker(long long num_sets, int set_size) {
    if (set_size < 1 || set_size > 62) throw std::invalid_argument("set size out of range");
    return num_sets < (1ll << (set_size - 1));
}

bool beck_maker_biased(long long a, long long b, long long num_sets, int set_size,
                       long long delta2, long long board_size) {
    if (a < 1 || b < 1 || num_sets < 0 || set_size < 1 || delta2 < 1 || board_size < 1)
        throw std::invalid_argument("beck criterion: all arguments must be positive");
    // clear denominators: numSets * a^s * (a+b)^3 > a^2 b^2 delta2 |X| (a+b)^s
    using wide = __int128;
    wide lhs = num_sets;
    wide rhs = static_cast<wide>(a) * a * b * b * delta2 * board_size;
    for (int i = 0; i < set_size; ++i) {
        lhs *= a;
        rhs *= a + b;
    }
    lhs *= static_cast<wide>(a + b) * (a + b) * (a + b);
    return lhs > rhs;
}

double bias_lower_bound(int n) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    double w = static_cast<double>(w_closed_form(n));
    double x = 0.5 * n * (n - 1.0);
    return std::sqrt(w / x);
}

double bias_upper_bound_glazik(int n) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    return std::sqrt(8.0 / 3.0 * n);
}

} // namespace dtg
