#include "dtg/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace dtg {

namespace {

struct MaskPair {
    uint64_t maker;
    uint64_t breaker;
    bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
    size_t operator()(const MaskPair& k) const {
        uint64_t h = k.maker * 0x9e3779b97f4a7c15ull;
        h ^= k.breaker + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

// element permutations induced by the rotation i -> (i mod n)+1, an
// automorphism of the odd parity tournament
std::vector<std::vector<int>> rotation_perms(const Tournament& t) {
    int n = t.size();
    std::vector<std::vector<int>> perms;
    std::vector<int> vmap(n + 1);
    for (int v = 1; v <= n; ++v) vmap[v] = v;
    for (int r = 1; r < n; ++r) {
        for (int v = 1; v <= n; ++v) vmap[v] = vmap[v] % n + 1;
        std::vector<int> perm(t.pair_count());
        for (int k = 0; k < t.pair_count(); ++k) {
            auto [i, j] = t.pair_at(k);
            perm[k] = t.pair_index(vmap[i], vmap[j]);
        }
        perms.push_back(std::move(perm));
    }
    return perms;
}

uint64_t permute_mask(uint64_t mask, const std::vector<int>& perm) {
    uint64_t out = 0;
    while (mask) {
        int e = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1ull << perm[e];
    }
    return out;
}

class BudgetExhausted {};

class Solver {
public:
    Solver(const WinningSetSystem& sys, int breaker_bias, uint64_t budget)
        : sys_(sys), bias_(breaker_bias), budget_(budget) {
        if (sys.board.pair_count() > 64)
            throw std::invalid_argument("solver limited to boards with at most 64 elements");
        if (breaker_bias < 1) throw std::invalid_argument("breaker bias must be >= 1");
        for (const auto& s : sys.sets)
            set_masks_.push_back((1ull << s[0]) | (1ull << s[1]) | (1ull << s[2]));
        int n = sys.board.size();
        if (n % 2 == 1 && n >= 3 && sys.board == Tournament::parity(n))
            rotations_ = rotation_perms(sys.board);
    }

    uint64_t nodes() const { return nodes_; }

    bool maker_wins(uint64_t maker, uint64_t breaker) {
        tick();
        uint64_t live_union = 0;
        bool any_live = false;
        for (uint64_t sm : set_masks_) {
            if (sm & breaker) continue;
            if ((sm & ~maker) == 0) return true;
            any_live = true;
            live_union |= sm;
        }
        if (!any_live) return false;
        // an existing threat wins outright
        for (uint64_t sm : set_masks_)
            if (!(sm & breaker) && std::popcount(sm & maker) == 2) return true;

        MaskPair key = canonical(maker, breaker);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        uint64_t open = live_union & ~maker & ~breaker;
        bool win = false;
        for (uint64_t rest = open; rest; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            if (breaker_replies_win(maker | (1ull << e), breaker, bias_, 0)) {
                win = true;
                break;
            }
        }
        memo_.emplace(key, win);
        return win;
    }

    // Breaker to move with `left` sub-moves in this turn; true iff Maker wins.
    bool breaker_replies_win(uint64_t maker, uint64_t breaker, int left, int min_id) {
        tick();
        uint64_t live_union = 0, forced = 0;
        int distinct_missing = 0;
        bool any_live = false;
        for (uint64_t sm : set_masks_) {
            if (sm & breaker) continue;
            uint64_t open = sm & ~maker;
            if (open == 0) return true; // Maker just completed a set
            any_live = true;
            live_union |= sm;
            if (std::popcount(open) == 1 && (open & ~breaker)) {
                if (!(forced & open)) ++distinct_missing;
                forced |= open;
            }
        }
        if (!any_live) return false;
        if (left == 0) return maker_wins(maker, breaker);
        if (distinct_missing > left) return true; // unanswerable multi-threat
        if (forced) {
            int e = std::countr_zero(forced);
            return breaker_replies_win(maker, breaker | (1ull << e), left - 1, min_id);
        }
        uint64_t open = live_union & ~maker & ~breaker;
        open &= ~((min_id == 0) ? 0ull : ((1ull << min_id) - 1));
        if (open == 0) {
            // only dead elements remain for this turn; deleting them is a pass
            return maker_wins(maker, breaker);
        }
        for (uint64_t rest = open; rest; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            if (!breaker_replies_win(maker, breaker | (1ull << e), left - 1, e + 1))
                return false; // Breaker found a refutation
        }
        return true;
    }

private:
    void tick() {
        if (++nodes_ > budget_) throw BudgetExhausted{};
    }

    MaskPair canonical(uint64_t maker, uint64_t breaker) const {
        MaskPair best{maker, breaker};
        for (const auto& perm : rotations_) {
            MaskPair cand{permute_mask(maker, perm), permute_mask(breaker, perm)};
            if (cand.maker < best.maker ||
                (cand.maker == best.maker && cand.breaker < best.breaker))
                best = cand;
        }
        return best;
    }

    const WinningSetSystem& sys_;
    int bias_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::vector<uint64_t> set_masks_;
    std::vector<std::vector<int>> rotations_;
    std::unordered_map<MaskPair, bool, MaskPairHash> memo_;
};

// Rebuilds a witness line by greedy descent through the solved tree; every
// queried child is already memoized, so this is cheap.
std::vector<int> principal_line(Solver& solver, const WinningSetSystem& sys, int bias,
                                bool maker_wins_root) {
    std::vector<int> line;
    uint64_t maker = 0, breaker = 0;
    std::vector<uint64_t> set_masks;
    for (const auto& s : sys.sets)
        set_masks.push_back((1ull << s[0]) | (1ull << s[1]) | (1ull << s[2]));

    auto live_open = [&]() {
        uint64_t u = 0;
        for (uint64_t sm : set_masks)
            if (!(sm & breaker)) u |= sm;
        return u & ~maker & ~breaker;
    };
    auto maker_complete = [&]() {
        for (uint64_t sm : set_masks)
            if ((sm & ~maker) == 0 && !(sm & breaker)) return true;
        return false;
    };

    for (int guard = 0; guard < 2 * sys.board.pair_count() + 4; ++guard) {
        if (maker_complete()) break;
        uint64_t open = live_open();
        if (open == 0) break; // all sets blocked
        // Maker's move
        int chosen = -1;
        for (uint64_t rest = open; rest; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            uint64_t bit = 1ull << e;
            for (uint64_t sm : set_masks)
                if (!(sm & breaker) && (sm & ~(maker | bit)) == 0) { chosen = e; break; }
            if (chosen >= 0) break;
        }
        if (chosen < 0) {
            for (uint64_t rest = open; rest; rest &= rest - 1) {
                int e = std::countr_zero(rest);
                bool v = solver.breaker_replies_win(maker | (1ull << e), breaker, bias, 0);
                if (v == maker_wins_root) { chosen = e; break; }
            }
        }
        if (chosen < 0) chosen = std::countr_zero(open);
        maker |= 1ull << chosen;
        line.push_back(chosen);
        if (maker_complete()) break;
        // Breaker's turn
        int min_id = 0;
        for (int k = 0; k < bias; ++k) {
            open = live_open();
            if (open == 0) break;
            uint64_t forced = 0;
            for (uint64_t sm : set_masks)
                if (!(sm & breaker) && std::popcount(sm & ~maker) == 1) forced |= sm & ~maker;
            int pick = -1;
            if (forced) {
                pick = std::countr_zero(forced);
            } else {
                uint64_t cands = open & ~((min_id == 0) ? 0ull : ((1ull << min_id) - 1));
                for (uint64_t rest = cands; rest; rest &= rest - 1) {
                    int e = std::countr_zero(rest);
                    bool v = k + 1 < bias
                                 ? solver.breaker_replies_win(maker, breaker | (1ull << e),
                                                              bias - k - 1, e + 1)
                                 : solver.maker_wins(maker, breaker | (1ull << e));
                    if (v == maker_wins_root) { pick = e; break; }
                }
                if (pick < 0 && cands) pick = std::countr_zero(cands);
                if (pick < 0) break;
                min_id = pick + 1;
            }
            breaker |= 1ull << pick;
            line.push_back(pick);
        }
    }
    return line;
}

} // namespace

SolveResult solve(const WinningSetSystem& sys, int breaker_bias, uint64_t budget) {
    SolveResult res;
    res.budget = budget;
    Solver solver(sys, breaker_bias, budget);
    try {
        bool maker = solver.maker_wins(0, 0);
        res.outcome = maker ? Outcome::MakerWin : Outcome::BreakerWin;
        res.principal_line = principal_line(solver, sys, breaker_bias, maker);
    } catch (const BudgetExhausted&) {
        res.outcome = Outcome::Unknown;
    }
    res.nodes = solver.nodes();
    return res;
}

ThresholdResult threshold_bias_exact(const Tournament& t, uint64_t budget) {
    WinningSetSystem sys = WinningSetSystem::build(t);
    ThresholdResult out;
    for (int b = 1; b <= std::max(1, t.pair_count()); ++b) {
        SolveResult r = solve(sys, b, budget);
        out.nodes += r.nodes;
        if (r.outcome == Outcome::Unknown) return out; // bias stays unset
        if (r.outcome == Outcome::BreakerWin) {
            out.bias = b;
            return out;
        }
    }
    return out;
}

// ---- scripted-strategy verification ----

namespace {

class VerifyDriver {
public:
    VerifyDriver(const StrategyScript& script, const WinningSetSystem& sys, int breaker_bias,
                 uint64_t budget, AdversaryMoves adversary = {})
        : script_(script), sys_(sys), bias_(breaker_bias), budget_(budget),
          adversary_(std::move(adversary)) {}

    VerifyResult run() {
        VerifyResult res;
        res.budget = budget_;
        GameState s = GameState::fresh(sys_, 1, bias_);
        History hist;
        try {
            bool script_ok = script_.role() == Player::Maker
                                 ? maker_scripted_turn(s, hist)
                                 : maker_enumerated_turn(s, hist);
            res.status =
                script_ok ? VerifyResult::Status::Ok : VerifyResult::Status::Counterexample;
            if (!script_ok) res.counterexample = make_transcript();
        } catch (const BudgetExhausted&) {
            res.status = VerifyResult::Status::Unknown;
        }
        res.nodes = nodes_;
        return res;
    }

private:
    void tick() {
        if (++nodes_ > budget_) throw BudgetExhausted{};
    }

    bool board_exhausted(const GameState& s) const {
        for (int e = 0; e < sys_.board.pair_count(); ++e)
            if (!s.claimed(e)) return false;
        return true;
    }

    // Returns true iff the scripted side wins on every explored branch.
    // On a refuted branch, `failure_line_` holds the refuting history.

    bool maker_scripted_turn(GameState& s, History& hist) {
        tick();
        if (auto w = winner_if_terminal(s)) return settle(*w, hist);
        if (board_exhausted(s)) return settle(Player::Breaker, hist);
        int e = script_.choose(s, hist);
        s.apply(Player::Maker, e);
        hist.push_back({Player::Maker, e});
        bool ok = breaker_enumerated_turn(s, hist);
        hist.pop_back();
        s.maker.remove(e);
        return ok;
    }

    bool breaker_enumerated_turn(GameState& s, History& hist) {
        return breaker_submove(s, hist, bias_, 0);
    }

    bool breaker_submove(GameState& s, History& hist, int left, int min_id) {
        tick();
        if (auto w = winner_if_terminal(s)) return settle(*w, hist);
        if (board_exhausted(s)) return settle(Player::Breaker, hist);
        if (left == 0) return maker_scripted_turn(s, hist);
        bool any = false;
        for (int e : adversary_candidates(s, min_id)) {
            if (s.claimed(e)) continue;
            any = true;
            s.apply(Player::Breaker, e);
            hist.push_back({Player::Breaker, e});
            bool ok = breaker_submove(s, hist, left - 1, e + 1);
            hist.pop_back();
            s.breaker.remove(e);
            if (!ok) return false;
        }
        if (!any) return maker_scripted_turn(s, hist); // board ran dry mid-turn
        return true;
    }

    bool maker_enumerated_turn(GameState& s, History& hist) {
        tick();
        if (auto w = winner_if_terminal(s)) return settle(*w, hist);
        if (board_exhausted(s)) return settle(Player::Breaker, hist);
        for (int e : adversary_candidates(s, 0)) {
            if (s.claimed(e)) continue;
            s.apply(Player::Maker, e);
            hist.push_back({Player::Maker, e});
            bool ok = breaker_scripted_turn(s, hist);
            hist.pop_back();
            s.maker.remove(e);
            if (!ok) return false;
        }
        return true;
    }

    bool breaker_scripted_turn(GameState& s, History& hist) {
        tick();
        if (auto w = winner_if_terminal(s)) return settle(*w, hist);
        if (board_exhausted(s)) return settle(Player::Breaker, hist);
        int e = script_.choose(s, hist);
        s.apply(Player::Breaker, e);
        hist.push_back({Player::Breaker, e});
        bool ok = maker_enumerated_turn(s, hist);
        hist.pop_back();
        s.breaker.remove(e);
        return ok;
    }

    std::vector<int> adversary_candidates(const GameState& s, int min_id) const {
        std::vector<int> out;
        if (adversary_) {
            for (int e : adversary_(s))
                if (e >= min_id) out.push_back(e);
        } else {
            for (int e = min_id; e < sys_.board.pair_count(); ++e)
                if (!s.claimed(e)) out.push_back(e);
        }
        return out;
    }

    bool settle(Player winner, const History& hist) {
        if (winner == script_.role()) return true;
        if (failure_line_.empty()) {
            failure_line_ = hist;
            failure_winner_ = winner;
        }
        return false;
    }

    Transcript make_transcript() const {
        Transcript tr;
        tr.board_text = sys_.board.to_text();
        tr.maker_bias = 1;
        tr.breaker_bias = bias_;
        for (const auto& h : failure_line_) {
            DirectedEdge e = sys_.board.edge_at(h.element);
            if (!tr.moves.empty() && tr.moves.back().player == h.player)
                tr.moves.back().edges.push_back(e);
            else
                tr.moves.push_back({h.player, {e}});
        }
        tr.winner = to_string(failure_winner_);
        return tr;
    }

    const StrategyScript& script_;
    const WinningSetSystem& sys_;
    int bias_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    AdversaryMoves adversary_;
    History failure_line_;
    Player failure_winner_ = Player::Breaker;
};

} // namespace

VerifyResult verify_maker_strategy(const StrategyScript& script, const WinningSetSystem& sys,
                                   int breaker_bias, uint64_t budget, AdversaryMoves adversary) {
    if (script.role() != Player::Maker)
        throw std::invalid_argument("verify_maker_strategy needs a Maker script");
    return VerifyDriver(script, sys, breaker_bias, budget, std::move(adversary)).run();
}

VerifyResult verify_breaker_strategy(const StrategyScript& script, const WinningSetSystem& sys,
                                     uint64_t budget) {
    if (script.role() != Player::Breaker)
        throw std::invalid_argument("verify_breaker_strategy needs a Breaker script");
    return VerifyDriver(script, sys, 1, budget).run();
}

} // namespace dtg
