#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dtg/hypergraph.hpp"
#include "dtg/strategies.hpp"

namespace dtg {

enum class Outcome { MakerWin, BreakerWin, Unknown };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::MakerWin: return "maker";
        case Outcome::BreakerWin: return "breaker";
        default: return "unknown";
    }
}

inline constexpr uint64_t kDefaultSolveBudget = 500'000'000ull;
inline constexpr uint64_t kDefaultVerifyBudget = 1'000'000'000ull;

struct SolveResult {
    Outcome outcome = Outcome::Unknown;
    std::vector<int> principal_line; // element ids, flattened play order
    uint64_t nodes = 0;
    uint64_t budget = 0;
};

// Perfect-play adjudication of the (1:b) game. Requires a board with at most
// 64 pair ids. Breaker's b sub-moves are explored id-increasing; states at
// Maker-turn boundaries are memoized, canonicalized under the rotation group
// when the board is an odd parity tournament.
SolveResult solve(const WinningSetSystem& sys, int breaker_bias = 1,
                  uint64_t budget = kDefaultSolveBudget);

// Smallest b for which the (1:b) game is a Breaker win.
struct ThresholdResult {
    std::optional<int> bias;
    uint64_t nodes = 0;
};
ThresholdResult threshold_bias_exact(const Tournament& t,
                                     uint64_t budget = kDefaultSolveBudget);

struct VerifyResult {
    enum class Status { Ok, Counterexample, Unknown } status = Status::Unknown;
    std::optional<Transcript> counterexample;
    uint64_t nodes = 0;
    uint64_t budget = 0;

    bool ok() const { return status == Status::Ok; }
};

// Optional move filter for the enumerated (non-scripted) side: given the
// position, returns the element ids the adversary may take, ascending.
// Default (empty function) is every unclaimed element.
using AdversaryMoves = std::function<std::vector<int>(const GameState&)>;

// Plays the Maker script against every Breaker reply sequence ((1:b) with
// b id-increasing sub-moves per Breaker turn). Ok iff Maker completes a
// winning set on every branch.
VerifyResult verify_maker_strategy(const StrategyScript& script, const WinningSetSystem& sys,
                                   int breaker_bias = 1,
                                   uint64_t budget = kDefaultVerifyBudget,
                                   AdversaryMoves adversary = {});

// Mirror image: Breaker script against every Maker reply sequence (1:1).
VerifyResult verify_breaker_strategy(const StrategyScript& script, const WinningSetSystem& sys,
                                     uint64_t budget = kDefaultVerifyBudget);

} // namespace dtg
