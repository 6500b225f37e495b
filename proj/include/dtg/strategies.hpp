#pragma once

#include <array>
#include <memory>
#include <vector>

#include "dtg/hypergraph.hpp"

namespace dtg {

struct HistoryEntry {
    Player player;
    int element;
};

using History = std::vector<HistoryEntry>;

// A scripted player. Scripts are pure functions of the visible position and
// the move history, so game-tree enumeration can branch without cloning.
class StrategyScript {
public:
    virtual ~StrategyScript() = default;
    virtual Player role() const = 0;
    virtual std::string name() const = 0;
    // Returns the element to claim/delete; called only when it is the
    // script's turn. Throws if the position is outside the script's book.
    virtual int choose(const GameState& s, const History& history) const = 0;
};

// Breaker pairing scripts for the parity boards on 3, 4 and 5 vertices.
std::unique_ptr<StrategyScript> breaker_pairing_small(int n);

// Breaker's case-split strategy for the parity board on 6 vertices:
// default pairing plus switch cascade, with the (2,5)-first-move special case.
std::unique_ptr<StrategyScript> breaker_pi6();

// Maker's cycle-hopping strategy on the parity board on 7 vertices.
std::unique_ptr<StrategyScript> maker_pi7();

// Maker on the parity board with n > 7: plays the 7-vertex strategy on the
// induced copy spanned by vertices 1..7 and ignores moves outside it.
std::unique_ptr<StrategyScript> maker_pin(int n);

// Maker restricted to an order-preserving copy of the 7-vertex parity board
// inside an arbitrary host tournament; `vertices` is the increasing 7-tuple.
std::unique_ptr<StrategyScript> maker_embedded(const std::array<int, 7>& vertices);

std::unique_ptr<StrategyScript> script_by_name(const std::string& name, int board_n);

struct CascadeResult {
    Pairing pairing;
    int length = 0;
};

// Re-pairs along the unique alternating path from `m` (a paired element) to
// the unpaired `free_elem`, leaving `m` unpaired. Identity when `m` is not in
// any pair. Throws if no such path exists.
CascadeResult compute_switch_cascade(const WinningSetSystem& sys, const Pairing& pairing,
                                     int m, int free_elem);

// Cycle data for the 7-vertex parity board, expressed as element ids of a
// host board through an order-preserving vertex map. Cycles are stored as
// their distinct-element sequence; the closing repeat of v0 is implicit.
struct CycleCatalog {
    std::vector<int> outer;                  // main outer cycle, 14 elements
    std::array<std::vector<int>, 4> bridges; // 5-element internal paths
    std::vector<int> detour_bridge;          // cycle used when the designated
                                             // bridge endpoint is cut
    std::vector<int> right_loop;             // cycle used when the cut is left
                                             // of the bridge
    std::vector<int> left_loop;              // cycle used when the cut is right
                                             // of the bridge
    std::vector<int> left_of_bridge;         // outer elements left of the bridge
    std::vector<int> right_of_bridge;        // outer elements right of it
    int bridge_far_end;                      // the endpoint opposite m1
    int first_move;                          // m1
};

CycleCatalog cycle_catalog(const Tournament& host, const std::array<int, 7>& vertices);

// Cycle the strategy follows after Breaker's first move b1 (-1 when Breaker
// has not yet moved or moved outside the copy).
const std::vector<int>& select_cycle(const CycleCatalog& cat, int b1);

} // namespace dtg
