#include "dtg/random_experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "dtg/rng.hpp"
#include "dtg/solver.hpp"
#include "dtg/strategies.hpp"

namespace dtg {

namespace {

const Tournament& parity7() {
    static const Tournament t = Tournament::parity(7);
    return t;
}

// For each ordered prefix position (a,b) with a<b in 1..7: does the pattern
// have the low-to-high edge a->b?
bool pattern_up(int a, int b) { return parity7().has_edge(a, b); }

double wilson_low(int succ, int n) {
    if (n == 0) return 0.0;
    const double z = 1.959963984540054;
    double phat = static_cast<double>(succ) / n;
    double denom = 1.0 + z * z / n;
    double centre = phat + z * z / (2.0 * n);
    double spread = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n));
    return (centre - spread) / denom;
}

double wilson_high(int succ, int n) {
    if (n == 0) return 1.0;
    const double z = 1.959963984540054;
    double phat = static_cast<double>(succ) / n;
    double denom = 1.0 + z * z / n;
    double centre = phat + z * z / (2.0 * n);
    double spread = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n));
    return (centre + spread) / denom;
}

void finish_estimate(McEstimate& e) {
    int decided = e.trials - e.unknowns;
    e.estimate = decided > 0 ? static_cast<double>(e.successes) / decided : 0.0;
    e.ci_low = wilson_low(e.successes, decided);
    e.ci_high = wilson_high(e.successes, decided);
}

// Extend an increasing partial map; every new vertex must realize the
// pattern orientation against all already-chosen ones.
bool extend_embedding(const Tournament& t, std::array<int, 7>& chosen, int depth) {
    if (depth == 7) return true;
    int start = depth == 0 ? 1 : chosen[depth - 1] + 1;
    for (int v = start; v <= t.size() - (6 - depth); ++v) {
        bool ok = true;
        for (int a = 0; a < depth && ok; ++a) {
            bool up = t.has_edge(chosen[a], v);
            if (up != pattern_up(a + 1, depth + 1)) ok = false;
        }
        if (!ok) continue;
        chosen[depth] = v;
        if (extend_embedding(t, chosen, depth + 1)) return true;
    }
    return false;
}

void count_extensions(const Tournament& t, std::array<int, 7>& chosen, int depth,
                      long long& total) {
    if (depth == 7) {
        ++total;
        return;
    }
    int start = depth == 0 ? 1 : chosen[depth - 1] + 1;
    for (int v = start; v <= t.size() - (6 - depth); ++v) {
        bool ok = true;
        for (int a = 0; a < depth && ok; ++a) {
            bool up = t.has_edge(chosen[a], v);
            if (up != pattern_up(a + 1, depth + 1)) ok = false;
        }
        if (!ok) continue;
        chosen[depth] = v;
        count_extensions(t, chosen, depth + 1, total);
    }
}

void run_trials(int jobs, int trials, const std::function<int(int)>& trial,
                std::vector<int>& results) {
    results.assign(trials, 0);
    if (jobs <= 1) {
        for (int i = 0; i < trials; ++i) results[i] = trial(i);
        return;
    }
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
                results[i] = trial(i);
        });
    }
    for (auto& w : workers) w.join();
}

void check_probability(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("edge probability must lie strictly between 0 and 1");
}

} // namespace

std::pair<int, int> parity7_orientation_counts() {
    int up = 0, down = 0;
    const Tournament& t = parity7();
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            (t.has_edge(i, j) ? up : down)++;
    return {up, down};
}

double copy_probability(double p) {
    check_probability(p);
    auto [up, down] = parity7_orientation_counts();
    return std::pow(p, up) * std::pow(1.0 - p, down);
}

double expected_copies(int n, double p) {
    check_probability(p);
    if (n < 7) return 0.0;
    double binom = 1.0;
    for (int i = 0; i < 7; ++i) binom = binom * (n - i) / (i + 1);
    return binom * copy_probability(p);
}

std::optional<std::array<int, 7>> find_embedding(const Tournament& t) {
    if (t.size() < 7) return std::nullopt;
    std::array<int, 7> chosen{};
    if (extend_embedding(t, chosen, 0)) return chosen;
    return std::nullopt;
}

long long count_embeddings(const Tournament& t) {
    if (t.size() < 7) return 0;
    std::array<int, 7> chosen{};
    long long total = 0;
    count_extensions(t, chosen, 0, total);
    return total;
}

McEstimate mc_embedding_probability(int n, double p, int trials, uint64_t seed, int jobs) {
    check_probability(p);
    if (trials < 1) throw std::invalid_argument("trial count must be positive");
    McEstimate est;
    est.trials = trials;
    est.master_seed = seed;
    std::vector<int> results;
    run_trials(jobs, trials, [&](int i) {
        Tournament t = Tournament::random(n, p, derive_seed(seed, i));
        return find_embedding(t).has_value() ? 1 : 0;
    }, results);
    for (int r : results) est.successes += r;
    finish_estimate(est);
    return est;
}

McEstimate mc_maker_win(int n, double p, int trials, uint64_t seed,
                        uint64_t per_trial_budget, int jobs) {
    check_probability(p);
    if (trials < 1) throw std::invalid_argument("trial count must be positive");
    McEstimate est;
    est.trials = trials;
    est.master_seed = seed;
    std::vector<int> results; // 1 win, 0 loss/no copy, -1 unknown
    run_trials(jobs, trials, [&](int i) {
        Tournament t = Tournament::random(n, p, derive_seed(seed, i));
        auto copy = find_embedding(t);
        if (!copy) return 0;
        auto script = maker_embedded(*copy);
        WinningSetSystem sys = WinningSetSystem::build(t);
        // The script never looks at elements outside the copy, so all of
        // Breaker's off-copy moves are interchangeable: enumerate the copy
        // elements plus one representative outsider per position.
        std::vector<int> copy_elems;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                copy_elems.push_back(t.pair_index((*copy)[a], (*copy)[b]));
        std::sort(copy_elems.begin(), copy_elems.end());
        auto adversary = [&t, copy_elems](const GameState& s) {
            std::vector<int> out;
            for (int e : copy_elems)
                if (!s.claimed(e)) out.push_back(e);
            for (int e = 0; e < t.pair_count(); ++e) {
                if (s.claimed(e)) continue;
                if (!std::binary_search(copy_elems.begin(), copy_elems.end(), e)) {
                    out.push_back(e);
                    break;
                }
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        VerifyResult vr = verify_maker_strategy(*script, sys, 1, per_trial_budget, adversary);
        switch (vr.status) {
            case VerifyResult::Status::Ok: return 1;
            case VerifyResult::Status::Counterexample: return 0;
            default: return -1;
        }
    }, results);
    for (int r : results) {
        if (r == 1) ++est.successes;
        if (r == -1) ++est.unknowns;
    }
    finish_estimate(est);
    return est;
}

} // namespace dtg
