#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtg/tournament.hpp"

namespace dtg {

enum class Player { Maker, Breaker };

inline const char* to_string(Player p) { return p == Player::Maker ? "maker" : "breaker"; }

// The board X of the game is the edge set of a tournament, addressed by pair
// id, and the family F is one 3-set per directed triangle. The full edge set
// is retained at construction; cut() prunes orphaned elements.
struct WinningSetSystem {
    Tournament board;
    std::vector<int> elements;                // pair ids, ascending
    std::vector<std::array<int, 3>> sets;     // pair ids, each sorted ascending
    std::vector<std::vector<int>> sets_of;    // pair id -> ids of sets containing it

    static WinningSetSystem build(const Tournament& t);

    // Removes every set containing element e, then every element left in no
    // surviving set.
    WinningSetSystem cut(int e) const;

    // max co-occurrence of two elements across sets (1 for triangle systems)
    int delta2() const;

    bool is_element(int e) const;
};

// Small dynamic bitset over element ids; value semantics.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe) : words_((universe + 63) / 64, 0) {}

    void add(int e) { words_[e >> 6] |= 1ull << (e & 63); }
    void remove(int e) { words_[e >> 6] &= ~(1ull << (e & 63)); }
    bool contains(int e) const { return (words_[e >> 6] >> (e & 63)) & 1; }
    int count() const;

    bool operator==(const ElementSet&) const = default;

private:
    std::vector<uint64_t> words_;
};

struct GameState {
    const WinningSetSystem* board = nullptr;
    ElementSet maker;
    ElementSet breaker;
    int maker_bias = 1;
    int breaker_bias = 1;
    Player to_move = Player::Maker;

    static GameState fresh(const WinningSetSystem& sys, int maker_bias = 1, int breaker_bias = 1);

    bool claimed(int e) const { return maker.contains(e) || breaker.contains(e); }
    void apply(Player p, int e); // throws on illegal move
};

struct Threat {
    int set_id;
    int missing; // the single unclaimed element
};

// All sets with exactly two Maker elements and no Breaker element,
// ascending by set id.
std::vector<Threat> threats(const GameState& s);

// Maker if some set is fully claimed by her; Breaker once every set contains
// a Breaker element (sound even before the board runs out); nullopt otherwise.
std::optional<Player> winner_if_terminal(const GameState& s);

struct Pairing {
    std::vector<std::array<int, 2>> pairs; // unordered element pairs
    std::optional<int> unpaired_hint;

    // sibling of e under this pairing, if e is paired
    std::optional<int> sibling(int e) const;
};

struct PairingCheck {
    bool ok;
    std::string diagnostic;
};

// Valid iff pairs are pairwise disjoint, avoid `exclude`, and every set of
// `sys` fully contains at least one pair.
PairingCheck validate_pairing(const WinningSetSystem& sys, const Pairing& pairing,
                              const std::vector<int>& exclude = {});

// ---- transcripts ----

struct Move {
    Player player;
    std::vector<DirectedEdge> edges; // one per sub-move of the turn
};

struct Transcript {
    std::string board_text; // tournament file payload
    int maker_bias = 1;
    int breaker_bias = 1;
    std::vector<Move> moves;
    std::string winner; // "maker" / "breaker" / "unknown"
    std::optional<uint64_t> seed;

    std::string to_json() const;
    static Transcript from_json(const std::string& text);
};

struct ReplayResult {
    bool ok;
    std::string error;   // offending ply on failure
    std::string winner;  // recomputed winner on success
};

// Re-plays a transcript move by move, checking legality and that the recorded
// winner matches the recomputed one.
ReplayResult replay(const Transcript& tr);

} // namespace dtg
