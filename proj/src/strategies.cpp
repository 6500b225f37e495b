#include "dtg/strategies.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dtg {

namespace {

int eid(const Tournament& t, int i, int j) { return t.pair_index(i, j); }

int lowest_unclaimed(const GameState& s) {
    for (int e = 0; e < s.board->board.pair_count(); ++e)
        if (!s.claimed(e)) return e;
    throw std::logic_error("no unclaimed element left");
}

// sibling rule: delete the sibling of Maker's last move, else lowest id
int pairing_response(const GameState& s, const History& history, const Pairing& pairing) {
    if (history.empty() || history.back().player != Player::Maker)
        throw std::logic_error("pairing response expects a Maker move to answer");
    if (auto sib = pairing.sibling(history.back().element))
        if (!s.claimed(*sib)) return *sib;
    return lowest_unclaimed(s);
}

std::vector<int> maker_elements(const History& history) {
    std::vector<int> out;
    for (const auto& h : history)
        if (h.player == Player::Maker) out.push_back(h.element);
    return out;
}

int turn_number(const History& history, Player role) {
    int k = 0;
    for (const auto& h : history)
        if (h.player == role) ++k;
    return k; // completed turns by `role` (bias 1 scripts)
}

class BreakerPairingSmall final : public StrategyScript {
public:
    BreakerPairingSmall(int n, Pairing pairing) : n_(n), pairing_(std::move(pairing)) {}

    Player role() const override { return Player::Breaker; }
    std::string name() const override { return "pairing"; }

    int choose(const GameState& s, const History& history) const override {
        if (s.board->board.size() != n_ || s.board->board != Tournament::parity(n_))
            throw std::invalid_argument("pairing script expects the parity board on " +
                                        std::to_string(n_) + " vertices");
        return pairing_response(s, history, pairing_);
    }

private:
    int n_;
    Pairing pairing_;
};

} // namespace

std::unique_ptr<StrategyScript> breaker_pairing_small(int n) {
    Tournament t = Tournament::parity(n);
    Pairing p;
    switch (n) {
        case 3:
            p.pairs = {{eid(t, 1, 2), eid(t, 2, 3)}};
            break;
        case 4:
            p.pairs = {{eid(t, 1, 2), eid(t, 1, 3)}, {eid(t, 3, 4), eid(t, 2, 4)}};
            break;
        case 5:
            p.pairs = {{eid(t, 1, 2), eid(t, 1, 3)},
                       {eid(t, 2, 3), eid(t, 2, 4)},
                       {eid(t, 3, 4), eid(t, 3, 5)},
                       {eid(t, 4, 5), eid(t, 1, 4)},
                       {eid(t, 1, 5), eid(t, 2, 5)}};
            break;
        default:
            throw std::invalid_argument("pairing script exists only for n in {3,4,5}");
    }
    return std::make_unique<BreakerPairingSmall>(n, std::move(p));
}

CascadeResult compute_switch_cascade(const WinningSetSystem& sys, const Pairing& pairing,
                                     int m, int free_elem) {
    auto sib = pairing.sibling(m);
    if (!sib) return {pairing, 0};

    // Walk the unique alternating pair/set path from m to the free element:
    // odd steps follow the current pairing, even steps hop to a co-occurring
    // element of the next pair (or to the free element, which terminates).
    std::vector<int> path = {m, *sib};
    std::vector<int> found;

    auto co_elements = [&](int e) {
        std::vector<int> out;
        for (int sid : sys.sets_of[e])
            for (int x : sys.sets[sid])
                if (x != e) out.push_back(x);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    auto dfs = [&](auto&& self, int cur) -> bool {
        for (int q : co_elements(cur)) {
            if (std::find(path.begin(), path.end(), q) != path.end()) continue;
            if (q == free_elem) {
                path.push_back(q);
                found = path;
                path.pop_back();
                return true;
            }
            auto qs = pairing.sibling(q);
            if (!qs || std::find(path.begin(), path.end(), *qs) != path.end()) continue;
            path.push_back(q);
            path.push_back(*qs);
            if (self(self, *qs)) return true;
            path.pop_back();
            path.pop_back();
        }
        return false;
    };

    if (!dfs(dfs, *sib))
        throw std::runtime_error("switch cascade: no alternating path to the free element");

    // drop every pair along the path, then re-pair (p2,p3), (p4,p5), ...
    Pairing out;
    for (const auto& p : pairing.pairs) {
        bool on_path = std::find(found.begin(), found.end(), p[0]) != found.end() ||
                       std::find(found.begin(), found.end(), p[1]) != found.end();
        if (!on_path) out.pairs.push_back(p);
    }
    for (size_t i = 1; i + 1 < found.size(); i += 2)
        out.pairs.push_back({found[i], found[i + 1]});
    out.unpaired_hint = m;
    return {out, static_cast<int>(found.size() / 2)};
}

namespace {

class BreakerPi6 final : public StrategyScript {
public:
    BreakerPi6()
        : board_(Tournament::parity(6)),
          sys_(WinningSetSystem::build(board_)),
          e25_(eid(board_, 2, 5)),
          e62_(eid(board_, 2, 6)),
          e51_(eid(board_, 1, 5)),
          e12_(eid(board_, 1, 2)),
          free_(eid(board_, 2, 3)) {}

    Player role() const override { return Player::Breaker; }
    std::string name() const override { return "pi6"; }

    int choose(const GameState& s, const History& history) const override {
        if (s.board->board != board_)
            throw std::invalid_argument("pi6 script expects the parity board on 6 vertices");
        auto makers = maker_elements(history);
        if (makers.empty()) throw std::logic_error("pi6 script: Maker has not moved");
        int turn = turn_number(history, Player::Breaker);
        int m1 = makers[0];

        if (m1 != e25_) {
            // Case 1: take (2,5), then play the cascaded default pairing.
            if (turn == 0) return e25_;
            return pairing_response(s, history, case1_pairing(m1));
        }
        // Case 2: Maker opened with (2,5).
        if (turn == 0) return e62_;
        int m2 = makers.at(1);
        if (m2 == e51_) {
            // Subcase 2A: block F6 at once, then the static pairing.
            if (turn == 1) return e12_;
            return pairing_response(s, history, static_pairing_2a());
        }
        // Subcase 2B
        if (turn == 1) return e51_;
        return pairing_response(s, history, case2b_pairing(m2));
    }

    Pairing default_pairing_case1() const {
        const Tournament& t = board_;
        Pairing p;
        p.pairs = {{eid(t, 1, 2), eid(t, 1, 3)}, {eid(t, 2, 4), eid(t, 3, 4)},
                   {eid(t, 3, 5), eid(t, 4, 5)}, {eid(t, 4, 6), eid(t, 5, 6)},
                   {eid(t, 3, 6), eid(t, 2, 6)}, {eid(t, 1, 5), eid(t, 1, 4)}};
        p.unpaired_hint = free_;
        return p;
    }

    Pairing default_pairing_2b() const {
        const Tournament& t = board_;
        Pairing p;
        p.pairs = {{eid(t, 1, 2), eid(t, 1, 3)}, {eid(t, 2, 4), eid(t, 3, 4)},
                   {eid(t, 3, 5), eid(t, 4, 5)}, {eid(t, 4, 6), eid(t, 5, 6)}};
        p.unpaired_hint = free_;
        return p;
    }

    Pairing static_pairing_2a() const {
        const Tournament& t = board_;
        Pairing p;
        p.pairs = {{eid(t, 2, 3), eid(t, 2, 4)}, {eid(t, 3, 4), eid(t, 3, 5)},
                   {eid(t, 4, 6), eid(t, 5, 6)}, {eid(t, 1, 4), eid(t, 4, 5)}};
        return p;
    }

    Pairing case1_pairing(int m1) const {
        WinningSetSystem surv = sys_.cut(e25_);
        auto res = compute_switch_cascade(surv, default_pairing_case1(), m1, free_);
        auto check = validate_pairing(surv, res.pairing, {m1});
        if (!check.ok) throw std::runtime_error("pi6 case 1 pairing invalid: " + check.diagnostic);
        return res.pairing;
    }

    Pairing case2b_pairing(int m2) const {
        WinningSetSystem surv = sys_.cut(e62_).cut(e51_);
        auto res = compute_switch_cascade(surv, default_pairing_2b(), m2, free_);
        auto check = validate_pairing(surv, res.pairing, {e25_, m2});
        if (!check.ok) throw std::runtime_error("pi6 case 2B pairing invalid: " + check.diagnostic);
        return res.pairing;
    }

private:
    Tournament board_;
    WinningSetSystem sys_;
    int e25_, e62_, e51_, e12_, free_;
};

} // namespace

std::unique_ptr<StrategyScript> breaker_pi6() { return std::make_unique<BreakerPi6>(); }

CycleCatalog cycle_catalog(const Tournament& host, const std::array<int, 7>& vertices) {
    auto map_edge = [&](int i, int j) {
        int u = vertices[i - 1], v = vertices[j - 1];
        if (!host.has_edge(u, v))
            throw std::invalid_argument("vertex map is not a parity-7 embedding");
        return host.pair_index(u, v);
    };
    auto seq = [&](std::initializer_list<std::pair<int, int>> edges) {
        std::vector<int> out;
        for (auto [i, j] : edges) out.push_back(map_edge(i, j));
        return out;
    };

    CycleCatalog cat;
    cat.outer = seq({{1, 2}, {3, 1}, {2, 3}, {4, 2}, {3, 4}, {5, 3}, {4, 5},
                     {6, 4}, {5, 6}, {7, 5}, {6, 7}, {1, 6}, {7, 1}, {2, 7}});
    cat.bridges = {seq({{1, 2}, {5, 1}, {2, 5}, {6, 2}, {5, 6}}),
                   seq({{2, 3}, {6, 2}, {3, 6}, {7, 3}, {6, 7}}),
                   seq({{3, 4}, {7, 3}, {4, 7}, {1, 4}, {7, 1}}),
                   seq({{4, 5}, {5, 1}, {1, 4}, {4, 7}, {7, 1}})};
    cat.detour_bridge = seq({{1, 2}, {3, 1}, {2, 3}, {6, 2}, {3, 6},
                             {7, 3}, {6, 7}, {1, 6}, {7, 1}, {2, 7}});
    cat.right_loop = seq({{1, 2}, {3, 1}, {2, 3}, {4, 2}, {3, 4}, {5, 3},
                          {4, 5}, {6, 4}, {5, 6}, {6, 2}, {2, 5}, {5, 1}});
    cat.left_loop = seq({{1, 2}, {2, 7}, {7, 1}, {1, 6}, {6, 7}, {7, 5},
                         {5, 6}, {6, 2}, {2, 5}, {5, 1}});
    cat.left_of_bridge = seq({{2, 7}, {7, 1}, {1, 6}, {6, 7}, {7, 5}});
    cat.right_of_bridge = seq({{3, 1}, {2, 3}, {4, 2}, {3, 4}, {5, 3}, {4, 5}, {6, 4}});
    cat.bridge_far_end = map_edge(5, 6);
    cat.first_move = map_edge(1, 2);
    return cat;
}

const std::vector<int>& select_cycle(const CycleCatalog& cat, int b1) {
    auto in = [&](const std::vector<int>& v) {
        return std::find(v.begin(), v.end(), b1) != v.end();
    };
    if (b1 < 0 || !in(cat.outer)) return cat.outer; // internal or off-copy cut
    if (b1 == cat.bridge_far_end) return cat.detour_bridge;
    if (in(cat.left_of_bridge)) return cat.right_loop;
    if (in(cat.right_of_bridge)) return cat.left_loop;
    throw std::logic_error("outer element not classified"); // unreachable
}

namespace {

class MakerCycleHopper final : public StrategyScript {
public:
    MakerCycleHopper(std::string name, int host_n, std::array<int, 7> vertices)
        : name_(std::move(name)), host_n_(host_n), vertices_(vertices) {}

    Player role() const override { return Player::Maker; }
    std::string name() const override { return name_; }

    int choose(const GameState& s, const History& history) const override {
        const Tournament& host = s.board->board;
        if (host_n_ != 0 && host.size() != host_n_)
            throw std::invalid_argument(name_ + " script expects a board on " +
                                        std::to_string(host_n_) + " vertices");
        CycleCatalog cat = cycle_catalog(host, vertices_);

        if (maker_elements(history).empty()) return cat.first_move;

        // Complete any open threat first; this also finishes the double
        // threat and punishes every Breaker deviation.
        for (const Threat& t : threats(s))
            if (!s.claimed(t.missing)) return t.missing;

        // first Breaker element decides which surviving cycle to hop
        int b1 = -1;
        for (const auto& h : history)
            if (h.player == Player::Breaker) { b1 = h.element; break; }
        const std::vector<int>& cycle = select_cycle(cat, b1);
        if (std::find(cycle.begin(), cycle.end(), b1) != cycle.end())
            throw std::logic_error("selected cycle did not survive Breaker's cut");

        // hop to the next shared element v2, v4, ...
        for (size_t i = 2; i + 1 < cycle.size(); i += 2) {
            int v = cycle[i];
            if (s.maker.contains(v)) continue;
            if (s.breaker.contains(v))
                throw std::logic_error("hop target already deleted; missed threat response");
            return v;
        }
        throw std::logic_error("cycle exhausted without a double threat");
    }

private:
    std::string name_;
    int host_n_;
    std::array<int, 7> vertices_;
};

} // namespace

std::unique_ptr<StrategyScript> maker_pi7() {
    return std::make_unique<MakerCycleHopper>("pi7", 7, std::array<int, 7>{1, 2, 3, 4, 5, 6, 7});
}

std::unique_ptr<StrategyScript> maker_pin(int n) {
    if (n <= 7) throw std::invalid_argument("pin script requires n > 7");
    return std::make_unique<MakerCycleHopper>("pin", n, std::array<int, 7>{1, 2, 3, 4, 5, 6, 7});
}

std::unique_ptr<StrategyScript> maker_embedded(const std::array<int, 7>& vertices) {
    for (int i = 0; i + 1 < 7; ++i)
        if (vertices[i] >= vertices[i + 1])
            throw std::invalid_argument("embedding tuple must be strictly increasing");
    return std::make_unique<MakerCycleHopper>("embedded", 0, vertices);
}

std::unique_ptr<StrategyScript> script_by_name(const std::string& name, int board_n) {
    if (name == "pairing") return breaker_pairing_small(board_n);
    if (name == "pi6") return breaker_pi6();
    if (name == "pi7") return maker_pi7();
    if (name == "pin") return maker_pin(board_n);
    throw std::invalid_argument("unknown strategy: " + name);
}

} // namespace dtg
