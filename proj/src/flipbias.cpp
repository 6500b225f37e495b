#include "dtg/flipbias.hpp"

#include <cmath>
#include <stdexcept>

namespace dtg {

static void check_odd(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("flip-bias analysis is defined for odd n >= 3");
}

FlipPlan build_flip_plan(int n) {
    check_odd(n);
    FlipPlan plan;
    plan.n = n;
    std::vector<int> dev(n + 1, 0);
    for (int i = 1; i <= n - 2; ++i) {
        int len = 0;
        int j = (n % 2 == i % 2) ? n : n - 1; // largest same-parity source
        for (; j > i; j -= 2) {
            // edge (j,i) is still oriented j->i: earlier phases only touch
            // edges into vertices below i
            plan.flips.push_back({j, i});
            plan.deltas.push_back(1 + dev[i] - dev[j]);
            ++dev[i];
            --dev[j];
            ++len;
        }
        plan.phase_lengths.push_back(len);
    }
    return plan;
}

long long triangles_after(const FlipPlan& plan, int k) {
    if (k < 0 || k > plan.total()) throw std::out_of_range("flip index out of range");
    long long remaining = w_closed_form(plan.n);
    for (int i = 0; i < k; ++i) remaining -= plan.deltas[i];
    return remaining;
}

long long kappa_upper_paper(int n) {
    check_odd(n);
    return static_cast<long long>(n - 1) * (n - 1) / 4 - 3;
}

long long kappa_upper_exact(int n) {
    FlipPlan plan = build_flip_plan(n);
    long long remaining = w_closed_form(n);
    if (remaining <= 3) return 0;
    for (int k = 0; k < plan.total(); ++k) {
        remaining -= plan.deltas[k];
        if (remaining <= 3) return k + 1;
    }
    throw std::logic_error("flip plan did not clear the board"); // unreachable
}

long long kappa_lower_exact(int n) {
    FlipPlan plan = build_flip_plan(n);
    long long N = static_cast<long long>(n) * (n - 1) / 2;
    long long remaining = w_closed_form(n);
    if (remaining <= N) return 0;
    long long best = 0;
    for (int k = 0; k < plan.total(); ++k) {
        remaining -= plan.deltas[k];
        if (remaining <= N) break;
        best = k + 1;
    }
    return best;
}

double kappa_lower_paper_asymptotic(int n) {
    check_odd(n);
    return 0.25 * n * static_cast<double>(n) -
           std::pow(1.5, 2.0 / 3.0) * std::pow(static_cast<double>(n), 4.0 / 3.0);
}

BlockDecomposition block_decomposition(int n) {
    FlipPlan plan = build_flip_plan(n);
    BlockDecomposition bd;
    bd.n = n;
    bd.N = static_cast<long long>(n) * (n - 1) / 2;
    bd.reverse_deltas.assign(plan.deltas.rbegin(), plan.deltas.rend());
    while (BlockDecomposition::S(bd.K + 1) <= bd.N) ++bd.K;

    long long w = w_closed_form(n);
    if (w <= bd.N) {
        // the whole reversed sequence cannot clear N; no flip budget exists
        bd.r_next = 0;
        bd.x = plan.total();
        return bd;
    }
    long long cum = BlockDecomposition::S(bd.K);
    long long idx = BlockDecomposition::L(bd.K);
    while (cum <= bd.N) {
        cum += bd.reverse_deltas.at(idx);
        ++idx;
        ++bd.r_next;
    }
    bd.x = BlockDecomposition::L(bd.K) + bd.r_next;
    return bd;
}

} // namespace dtg
