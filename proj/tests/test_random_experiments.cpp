#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>

#include "dtg/random_experiments.hpp"
#include "dtg/rng.hpp"

using namespace dtg;

TEST_CASE("copy probability and orientation split") {
    auto [up, down] = parity7_orientation_counts();
    CHECK(up == 12);
    CHECK(down == 9);
    CHECK(copy_probability(0.5) == std::ldexp(1.0, -21));
    // the split is uneven, so the probability is not symmetric in p
    CHECK(copy_probability(0.3) != copy_probability(0.7));
    CHECK(copy_probability(0.999) < 1e-3 * copy_probability(0.5));
    CHECK_THROWS_AS(copy_probability(0.0), std::invalid_argument);
    CHECK_THROWS_AS(copy_probability(1.0), std::invalid_argument);
}

TEST_CASE("copy probability against the exhaustive orientation sum") {
    // sum the product measure over all 2^21 orientations of a fixed 7-set,
    // keeping those equal to the parity pattern
    Tournament pat = Tournament::parity(7);
    uint32_t pattern = 0;
    for (int k = 0; k < 21; ++k) {
        auto [i, j] = pat.pair_at(k);
        if (pat.has_edge(i, j)) pattern |= 1u << k;
    }
    for (double p : {0.3, 0.5, 0.62}) {
        double pw[22], qw[22];
        pw[0] = qw[0] = 1.0;
        for (int k = 1; k <= 21; ++k) {
            pw[k] = pw[k - 1] * p;
            qw[k] = qw[k - 1] * (1.0 - p);
        }
        double total = 0.0, matched = 0.0;
        for (uint32_t mask = 0; mask < (1u << 21); ++mask) {
            int ones = std::popcount(mask);
            double prob = pw[ones] * qw[21 - ones];
            total += prob;
            if (mask == pattern) matched += prob;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(matched - copy_probability(p)) < 1e-12);
    }
}

TEST_CASE("expected copy counts") {
    CHECK(expected_copies(6, 0.5) == 0.0);
    CHECK(expected_copies(7, 0.5) == doctest::Approx(std::ldexp(1.0, -21)).epsilon(1e-12));
    CHECK(expected_copies(30, 0.5) == doctest::Approx(0.9707).epsilon(1e-3));
    double prev = 0.0;
    for (int n = 7; n <= 60; ++n) {
        double e = expected_copies(n, 0.5);
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("embedding search basics") {
    auto emb9 = find_embedding(Tournament::parity(9));
    REQUIRE(emb9.has_value());
    CHECK(*emb9 == std::array<int, 7>{1, 2, 3, 4, 5, 6, 7});
    CHECK_FALSE(find_embedding(Tournament::transitive(40)).has_value());
    CHECK_FALSE(find_embedding(Tournament::parity(6)).has_value());
    CHECK(find_embedding(Tournament::parity(7)) == std::array<int, 7>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("embeddings are sound and lexicographically least") {
    Tournament pat = Tournament::parity(7);
    SplitMix64 g(31);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Tournament t = Tournament::random(24, 0.5, g.next());
        auto emb = find_embedding(t);
        if (!emb) continue;
        ++found;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) {
                CHECK((*emb)[a] < (*emb)[b]);
                CHECK(t.has_edge((*emb)[a], (*emb)[b]) == pat.has_edge(a + 1, b + 1));
            }
    }
    CHECK(found > 0);
}

TEST_CASE("search agrees with exhaustive counting on small hosts") {
    SplitMix64 g(77);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 7 + static_cast<int>(g.next() % 6); // up to 12
        Tournament t = Tournament::random(n, 0.5, g.next());
        long long copies = count_embeddings(t);
        CHECK(find_embedding(t).has_value() == (copies > 0));
    }
}

TEST_CASE("expected copies match the enumerated sample mean at n=14") {
    const int trials = 10000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < trials; ++i) {
        auto c = static_cast<double>(
            count_embeddings(Tournament::random(14, 0.5, derive_seed(555, i))));
        sum += c;
        sumsq += c * c;
    }
    double mean = sum / trials;
    double var = (sumsq - sum * sum / trials) / (trials - 1);
    double se = std::sqrt(var / trials);
    double want = expected_copies(14, 0.5);
    CHECK(std::abs(mean - want) <= 3.0 * se);
}

TEST_CASE("monte carlo embedding probability") {
    McEstimate est = mc_embedding_probability(50, 0.5, 200, 9);
    CHECK(est.trials == 200);
    CHECK(est.unknowns == 0);
    CHECK(est.estimate >= 0.99);
    CHECK(est.ci_low <= est.estimate);
    CHECK(est.ci_high >= est.estimate);
    CHECK(est.master_seed == 9);

    McEstimate tiny = mc_embedding_probability(7, 0.5, 2000, 9);
    CHECK(tiny.estimate < 0.01); // single-subset probability is 2^-21

    CHECK_THROWS_AS(mc_embedding_probability(50, 0.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_embedding_probability(50, 0.5, 0, 1), std::invalid_argument);
}

TEST_CASE("estimates are monotone in host size at p one half") {
    double prev = -1.0;
    for (int n : {10, 20, 30, 50}) {
        McEstimate est = mc_embedding_probability(n, 0.5, 400, 321);
        CHECK(est.estimate >= prev);
        prev = est.estimate;
    }
}

TEST_CASE("parallel and sequential runs aggregate identically") {
    McEstimate seq = mc_embedding_probability(30, 0.5, 120, 17, 1);
    McEstimate par = mc_embedding_probability(30, 0.5, 120, 17, 4);
    CHECK(seq.successes == par.successes);
    CHECK(seq.estimate == par.estimate);

    McEstimate wseq = mc_maker_win(40, 0.5, 8, 23, 10000000ull, 1);
    McEstimate wpar = mc_maker_win(40, 0.5, 8, 23, 10000000ull, 4);
    CHECK(wseq.successes == wpar.successes);
    CHECK(wseq.unknowns == wpar.unknowns);
}

TEST_CASE("maker win certification over random hosts") {
    McEstimate est = mc_maker_win(50, 0.5, 10, 2);
    CHECK(est.trials == 10);
    CHECK(est.successes + est.unknowns <= est.trials);
    CHECK(est.successes == 10); // every sampled host contains a copy and certifies
    CHECK(est.unknowns == 0);

    // tiny budget: trials come back unknown, never as wins
    McEstimate starved = mc_maker_win(50, 0.5, 5, 2, 20);
    CHECK(starved.successes == 0);
    CHECK(starved.unknowns == 5);
    CHECK_THROWS_AS(mc_maker_win(50, 1.0, 5, 2), std::invalid_argument);
}
