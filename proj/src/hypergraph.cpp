#include "dtg/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dtg {

WinningSetSystem WinningSetSystem::build(const Tournament& t) {
    WinningSetSystem sys{t, {}, {}, {}};
    sys.elements.resize(t.pair_count());
    for (int k = 0; k < t.pair_count(); ++k) sys.elements[k] = k;
    sys.sets_of.resize(t.pair_count());
    for (const Triangle& tri : t.triangles()) {
        std::array<int, 3> s = {t.pair_index(tri[0], tri[1]), t.pair_index(tri[1], tri[2]),
                                t.pair_index(tri[0], tri[2])};
        std::sort(s.begin(), s.end());
        int id = static_cast<int>(sys.sets.size());
        sys.sets.push_back(s);
        for (int e : s) sys.sets_of[e].push_back(id);
    }
    return sys;
}

bool WinningSetSystem::is_element(int e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

WinningSetSystem WinningSetSystem::cut(int e) const {
    if (!is_element(e)) throw std::invalid_argument("cut: unknown element");
    WinningSetSystem out{board, {}, {}, {}};
    out.sets_of.resize(board.pair_count());
    for (const auto& s : sets) {
        if (s[0] == e || s[1] == e || s[2] == e) continue;
        int id = static_cast<int>(out.sets.size());
        out.sets.push_back(s);
        for (int x : s) out.sets_of[x].push_back(id);
    }
    for (int x : elements) {
        if (x == e) continue;
        // keep elements still covering some surviving set; an element in no
        // set to begin with stays (only orphaned ones are dropped)
        if (!sets_of[x].empty() && out.sets_of[x].empty()) continue;
        out.elements.push_back(x);
    }
    return out;
}

int WinningSetSystem::delta2() const {
    // max over element pairs of the number of sets containing both
    std::map<std::pair<int, int>, int> count;
    for (const auto& s : sets) {
        count[{s[0], s[1]}]++;
        count[{s[0], s[2]}]++;
        count[{s[1], s[2]}]++;
    }
    int best = 0;
    for (const auto& [pair, c] : count) best = std::max(best, c);
    return best;
}

int ElementSet::count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

GameState GameState::fresh(const WinningSetSystem& sys, int maker_bias, int breaker_bias) {
    GameState s;
    s.board = &sys;
    s.maker = ElementSet(sys.board.pair_count());
    s.breaker = ElementSet(sys.board.pair_count());
    s.maker_bias = maker_bias;
    s.breaker_bias = breaker_bias;
    return s;
}

void GameState::apply(Player p, int e) {
    if (e < 0 || e >= board->board.pair_count()) throw std::invalid_argument("bad element id");
    if (claimed(e)) throw std::invalid_argument("element already claimed");
    (p == Player::Maker ? maker : breaker).add(e);
}

std::vector<Threat> threats(const GameState& s) {
    std::vector<Threat> out;
    const auto& sets = s.board->sets;
    for (size_t id = 0; id < sets.size(); ++id) {
        int mine = 0, missing = -1;
        bool blocked = false;
        for (int e : sets[id]) {
            if (s.breaker.contains(e)) { blocked = true; break; }
            if (s.maker.contains(e)) ++mine;
            else missing = e;
        }
        if (!blocked && mine == 2) out.push_back({static_cast<int>(id), missing});
    }
    return out;
}

std::optional<Player> winner_if_terminal(const GameState& s) {
    bool all_blocked = true;
    for (const auto& set : s.board->sets) {
        bool blocked = false, complete = true;
        for (int e : set) {
            if (s.breaker.contains(e)) blocked = true;
            if (!s.maker.contains(e)) complete = false;
        }
        if (complete) return Player::Maker;
        if (!blocked) all_blocked = false;
    }
    if (all_blocked) return Player::Breaker;
    return std::nullopt;
}

std::optional<int> Pairing::sibling(int e) const {
    for (const auto& p : pairs) {
        if (p[0] == e) return p[1];
        if (p[1] == e) return p[0];
    }
    return std::nullopt;
}

PairingCheck validate_pairing(const WinningSetSystem& sys, const Pairing& pairing,
                              const std::vector<int>& exclude) {
    std::vector<int> used;
    for (const auto& p : pairing.pairs) {
        for (int e : p) {
            if (std::find(used.begin(), used.end(), e) != used.end())
                return {false, "element " + std::to_string(e) + " appears in two pairs"};
            if (std::find(exclude.begin(), exclude.end(), e) != exclude.end())
                return {false, "pair touches excluded element " + std::to_string(e)};
            used.push_back(e);
        }
    }
    for (size_t id = 0; id < sys.sets.size(); ++id) {
        const auto& set = sys.sets[id];
        bool covered = false;
        for (const auto& p : pairing.pairs) {
            bool a = std::find(set.begin(), set.end(), p[0]) != set.end();
            bool b = std::find(set.begin(), set.end(), p[1]) != set.end();
            if (a && b) { covered = true; break; }
        }
        if (!covered)
            return {false, "set " + std::to_string(id) + " contains no blocking pair"};
    }
    return {true, ""};
}

// ---- transcripts ----

using nlohmann::json;

std::string Transcript::to_json() const {
    json j;
    j["board"] = board_text;
    j["bias"] = {maker_bias, breaker_bias};
    j["moves"] = json::array();
    for (const auto& m : moves) {
        json jm;
        jm["player"] = to_string(m.player);
        jm["elements"] = json::array();
        for (const auto& e : m.edges) jm["elements"].push_back({e.from, e.to});
        j["moves"].push_back(jm);
    }
    j["winner"] = winner;
    if (seed) j["seed"] = *seed;
    return j.dump(2);
}

Transcript Transcript::from_json(const std::string& text) {
    json j = json::parse(text);
    Transcript tr;
    tr.board_text = j.at("board").get<std::string>();
    tr.maker_bias = j.at("bias").at(0).get<int>();
    tr.breaker_bias = j.at("bias").at(1).get<int>();
    for (const auto& jm : j.at("moves")) {
        Move m;
        std::string p = jm.at("player").get<std::string>();
        if (p != "maker" && p != "breaker") throw std::invalid_argument("bad player: " + p);
        m.player = p == "maker" ? Player::Maker : Player::Breaker;
        for (const auto& je : jm.at("elements"))
            m.edges.push_back({je.at(0).get<int>(), je.at(1).get<int>()});
        tr.moves.push_back(std::move(m));
    }
    tr.winner = j.at("winner").get<std::string>();
    if (j.contains("seed")) tr.seed = j.at("seed").get<uint64_t>();
    return tr;
}

ReplayResult replay(const Transcript& tr) {
    Tournament board = Tournament::from_text(tr.board_text);
    WinningSetSystem sys = WinningSetSystem::build(board);
    GameState s = GameState::fresh(sys, tr.maker_bias, tr.breaker_bias);
    std::string outcome = "unknown";
    if (auto w = winner_if_terminal(s)) outcome = to_string(*w); // triangle-free board
    for (size_t ply = 0; ply < tr.moves.size(); ++ply) {
        const Move& m = tr.moves[ply];
        if (outcome != "unknown")
            return {false, "ply " + std::to_string(ply) + ": move after game over", ""};
        Player expected = ply % 2 == 0 ? Player::Maker : Player::Breaker;
        if (m.player != expected)
            return {false, "ply " + std::to_string(ply) + ": out of turn", ""};
        int bias = m.player == Player::Maker ? tr.maker_bias : tr.breaker_bias;
        int unclaimed = 0;
        for (int e = 0; e < board.pair_count(); ++e)
            if (!s.claimed(e)) ++unclaimed;
        int expect_count = std::min(bias, unclaimed);
        if (static_cast<int>(m.edges.size()) != expect_count)
            return {false, "ply " + std::to_string(ply) + ": wrong sub-move count", ""};
        for (const auto& e : m.edges) {
            if (!board.has_edge(e.from, e.to))
                return {false, "ply " + std::to_string(ply) + ": edge not on board", ""};
            int id = board.pair_index(e.from, e.to);
            if (s.claimed(id))
                return {false, "ply " + std::to_string(ply) + ": element already claimed", ""};
            s.apply(m.player, id);
        }
        if (auto w = winner_if_terminal(s)) outcome = to_string(*w);
    }
    if (outcome == "unknown") {
        bool exhausted = true;
        for (int e = 0; e < board.pair_count() && exhausted; ++e)
            if (!s.claimed(e)) exhausted = false;
        if (exhausted) outcome = "breaker";
    }
    if (outcome != tr.winner)
        return {false, "recorded winner '" + tr.winner + "' but replay gives '" + outcome + "'",
                outcome};
    return {true, "", outcome};
}

} // namespace dtg
