#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtg/criteria.hpp"
#include "dtg/flipbias.hpp"
#include "dtg/hypergraph.hpp"
#include "dtg/random_experiments.hpp"
#include "dtg/rng.hpp"
#include "dtg/solver.hpp"
#include "dtg/strategies.hpp"
#include "dtg/tournament.hpp"

namespace {

constexpr const char* kToolVersion = "dtg 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct Globals {
    uint64_t seed = 0;
    uint64_t budget = 0; // 0: per-command default
    std::string out;     // empty: stdout
    std::string format = "csv";
    int jobs = 1;
    std::string argv_line;
};

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Every result emission carries the provenance header required for
// reproducing the run from the file alone.
class ResultWriter {
public:
    ResultWriter(const Globals& g, uint64_t effective_budget) : g_(g) {
        if (g.format == "json") {
            json_["meta"] = {{"tool", kToolVersion},
                             {"argv", g.argv_line},
                             {"seed", g.seed},
                             {"budget", effective_budget}};
        } else {
            csv_ << "# tool=" << kToolVersion << "\n"
                 << "# argv=" << g.argv_line << "\n"
                 << "# seed=" << g.seed << "\n"
                 << "# budget=" << effective_budget << "\n";
        }
    }

    void csv_line(const std::string& line) { csv_ << line << "\n"; }
    nlohmann::ordered_json& json() { return json_; }
    bool is_json() const { return g_.format == "json"; }

    void flush() const {
        std::string payload =
            g_.format == "json" ? json_.dump(2) + "\n" : csv_.str();
        if (g_.out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(g_.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + g_.out);
            f << payload;
        }
    }

private:
    const Globals& g_;
    std::ostringstream csv_;
    nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

void write_raw(const Globals& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + g.out);
        f << payload;
    }
}

std::vector<std::string> split(const std::string& s, char sep, size_t max_parts) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (out.size() + 1 < max_parts) {
        size_t c = s.find(sep, pos);
        if (c == std::string::npos) break;
        out.push_back(s.substr(pos, c - pos));
        pos = c + 1;
    }
    out.push_back(s.substr(pos));
    return out;
}

// Board schemes: parity:n | transitive:n | random:n:p[:seed] | file:path
dtg::Tournament parse_board(const std::string& scheme, uint64_t default_seed) {
    auto head = split(scheme, ':', 2);
    const std::string& kind = head[0];
    if (head.size() < 2 || head[1].empty())
        throw CLI::ValidationError("board", "scheme needs an argument: " + scheme);
    if (kind == "parity") return dtg::Tournament::parity(std::stoi(head[1]));
    if (kind == "transitive") return dtg::Tournament::transitive(std::stoi(head[1]));
    if (kind == "random") {
        auto parts = split(head[1], ':', 3);
        if (parts.size() < 2)
            throw CLI::ValidationError("board", "random scheme is random:n:p[:seed]");
        int n = std::stoi(parts[0]);
        double p = std::stod(parts[1]);
        uint64_t seed = parts.size() == 3 ? std::stoull(parts[2]) : default_seed;
        return dtg::Tournament::random(n, p, seed);
    }
    if (kind == "file") {
        std::ifstream f(head[1], std::ios::binary);
        if (!f) throw CLI::ValidationError("board", "cannot read board file: " + head[1]);
        std::ostringstream ss;
        ss << f.rdbuf();
        return dtg::Tournament::from_text(ss.str());
    }
    throw CLI::ValidationError("board", "unknown board scheme: " + kind);
}

// ---- subcommand bodies ----

int cmd_gen(const Globals& g, const std::string& board) {
    // board files are data files in the bit-exact two-line format, no header
    write_raw(g, parse_board(board, g.seed).to_text());
    return kExitOk;
}

int cmd_triangles(const Globals& g, const std::string& board, bool list) {
    dtg::Tournament t = parse_board(board, g.seed);
    auto tris = t.triangles();
    ResultWriter w(g, 0);
    if (w.is_json()) {
        w.json()["n"] = t.size();
        w.json()["count"] = tris.size();
        w.json()["moon"] = t.count_triangles_moon();
        if (list) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& tr : tris) arr.push_back({tr[0], tr[1], tr[2]});
            w.json()["triangles"] = arr;
        }
    } else {
        w.csv_line("n,count,moon");
        w.csv_line(std::to_string(t.size()) + "," + std::to_string(tris.size()) + "," +
                   std::to_string(t.count_triangles_moon()));
        if (list) {
            w.csv_line("a,b,c");
            for (const auto& tr : tris)
                w.csv_line(std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
                           std::to_string(tr[2]));
        }
    }
    w.flush();
    return kExitOk;
}

std::string line_to_edges(const dtg::Tournament& t, const std::vector<int>& line) {
    std::string s;
    for (int e : line) {
        auto de = t.edge_at(e);
        if (!s.empty()) s += ' ';
        s += std::to_string(de.from) + "->" + std::to_string(de.to);
    }
    return s;
}

int cmd_solve(const Globals& g, const std::string& board, int bias, bool threshold) {
    uint64_t budget = g.budget ? g.budget : dtg::kDefaultSolveBudget;
    dtg::Tournament t = parse_board(board, g.seed);
    ResultWriter w(g, budget);
    if (threshold) {
        auto res = dtg::threshold_bias_exact(t, budget);
        if (w.is_json()) {
            if (res.bias)
                w.json()["threshold_bias"] = *res.bias;
            else
                w.json()["threshold_bias"] = nullptr;
            w.json()["nodes"] = res.nodes;
        } else {
            w.csv_line("threshold_bias,nodes");
            w.csv_line((res.bias ? std::to_string(*res.bias) : "unknown") + "," +
                       std::to_string(res.nodes));
        }
        w.flush();
        return res.bias ? kExitOk : kExitUnknown;
    }
    auto sys = dtg::WinningSetSystem::build(t);
    auto res = dtg::solve(sys, bias, budget);
    if (w.is_json()) {
        w.json()["outcome"] = dtg::to_string(res.outcome);
        w.json()["nodes"] = res.nodes;
        w.json()["principal_line"] = line_to_edges(t, res.principal_line);
    } else {
        w.csv_line("outcome,nodes,principal_line");
        w.csv_line(std::string(dtg::to_string(res.outcome)) + "," + std::to_string(res.nodes) +
                   "," + line_to_edges(t, res.principal_line));
    }
    w.flush();
    return res.outcome == dtg::Outcome::Unknown ? kExitUnknown : kExitOk;
}

int cmd_verify(const Globals& g, const std::string& board, const std::string& maker,
               const std::string& breaker, int bias) {
    if (maker.empty() == breaker.empty())
        throw CLI::ValidationError("verify", "give exactly one of --maker / --breaker");
    uint64_t budget = g.budget ? g.budget : dtg::kDefaultVerifyBudget;
    dtg::Tournament t = parse_board(board, g.seed);
    auto sys = dtg::WinningSetSystem::build(t);
    auto script = dtg::script_by_name(maker.empty() ? breaker : maker, t.size());
    dtg::VerifyResult res = maker.empty()
                                ? dtg::verify_breaker_strategy(*script, sys, budget)
                                : dtg::verify_maker_strategy(*script, sys, bias, budget);
    ResultWriter w(g, budget);
    std::string status = res.status == dtg::VerifyResult::Status::Ok ? "ok"
                         : res.status == dtg::VerifyResult::Status::Counterexample
                             ? "counterexample"
                             : "unknown";
    std::string cex_path;
    if (res.counterexample) {
        cex_path = g.out.empty() ? "counterexample.json" : g.out + ".counterexample.json";
        std::ofstream f(cex_path, std::ios::binary);
        f << res.counterexample->to_json() << "\n";
    }
    if (w.is_json()) {
        w.json()["script"] = script->name();
        w.json()["status"] = status;
        w.json()["nodes"] = res.nodes;
        if (!cex_path.empty()) w.json()["counterexample_file"] = cex_path;
    } else {
        w.csv_line("script,status,nodes,counterexample_file");
        w.csv_line(script->name() + "," + status + "," + std::to_string(res.nodes) + "," +
                   cex_path);
    }
    w.flush();
    if (!cex_path.empty()) std::cerr << "counterexample transcript: " << cex_path << "\n";
    switch (res.status) {
        case dtg::VerifyResult::Status::Ok: return kExitOk;
        case dtg::VerifyResult::Status::Counterexample: return kExitVerifyFail;
        default: return kExitUnknown;
    }
}

int cmd_play(const Globals& g, const std::string& board, const std::string& maker,
             const std::string& breaker, int bias) {
    dtg::Tournament t = parse_board(board, g.seed);
    auto sys = dtg::WinningSetSystem::build(t);
    std::unique_ptr<dtg::StrategyScript> ms, bs;
    if (!maker.empty()) ms = dtg::script_by_name(maker, t.size());
    if (!breaker.empty()) bs = dtg::script_by_name(breaker, t.size());

    dtg::GameState s = dtg::GameState::fresh(sys, 1, bias);
    dtg::History hist;
    dtg::Transcript tr;
    tr.board_text = t.to_text();
    tr.breaker_bias = bias;

    auto lowest = [&](void) {
        for (int e = 0; e < t.pair_count(); ++e)
            if (!s.claimed(e)) return e;
        return -1;
    };
    auto push_move = [&](dtg::Player p, int e) {
        s.apply(p, e);
        hist.push_back({p, e});
        auto de = t.edge_at(e);
        if (!tr.moves.empty() && tr.moves.back().player == p)
            tr.moves.back().edges.push_back(de);
        else
            tr.moves.push_back({p, {de}});
    };

    std::string winner = "breaker";
    for (bool done = false; !done;) {
        // Maker's turn
        if (auto w0 = dtg::winner_if_terminal(s)) { winner = dtg::to_string(*w0); break; }
        int me = ms ? ms->choose(s, hist) : lowest();
        if (me < 0) break;
        push_move(dtg::Player::Maker, me);
        if (auto w1 = dtg::winner_if_terminal(s)) { winner = dtg::to_string(*w1); break; }
        // Breaker's turn, bias sub-moves
        for (int k = 0; k < bias; ++k) {
            int be = bs ? bs->choose(s, hist) : lowest();
            if (be < 0) { done = true; break; }
            push_move(dtg::Player::Breaker, be);
            if (auto w2 = dtg::winner_if_terminal(s)) {
                winner = dtg::to_string(*w2);
                done = true;
                break;
            }
        }
    }
    tr.winner = winner;
    tr.seed = g.seed;
    write_raw(g, tr.to_json() + "\n");
    return kExitOk;
}

int cmd_replay(const Globals& g, const std::string& in_path) {
    std::ifstream f(in_path, std::ios::binary);
    if (!f) throw CLI::ValidationError("replay", "cannot read transcript: " + in_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    dtg::Transcript tr = dtg::Transcript::from_json(ss.str());
    dtg::ReplayResult res = dtg::replay(tr);
    ResultWriter w(g, 0);
    if (w.is_json()) {
        w.json()["ok"] = res.ok;
        w.json()["winner"] = res.winner;
        w.json()["error"] = res.error;
    } else {
        w.csv_line("ok,winner,error");
        w.csv_line(std::string(res.ok ? "true" : "false") + "," + res.winner + "," + res.error);
    }
    w.flush();
    if (!res.ok) std::cerr << "replay failed: " << res.error << "\n";
    return res.ok ? kExitOk : kExitVerifyFail;
}

int cmd_flip(const Globals& g, int n) {
    dtg::FlipPlan plan = dtg::build_flip_plan(n);
    dtg::Tournament t = dtg::Tournament::parity(n);
    std::vector<int> dev(n + 1, 0);
    ResultWriter w(g, 0);
    auto dev_row = [&]() {
        std::string s;
        for (int v = 1; v <= n; ++v) s += "," + std::to_string(dev[v]);
        return s;
    };
    if (w.is_json()) {
        auto rows = nlohmann::ordered_json::array();
        int phase = 1, used = 0;
        long long remaining = dtg::w_closed_form(n);
        for (int k = 0; k < plan.total(); ++k) {
            while (phase <= static_cast<int>(plan.phase_lengths.size()) &&
                   used == plan.phase_lengths[phase - 1]) {
                ++phase;
                used = 0;
            }
            ++used;
            auto e = plan.flips[k];
            ++dev[e.to];
            --dev[e.from];
            remaining -= plan.deltas[k];
            nlohmann::ordered_json row;
            row["flip"] = k + 1;
            row["phase"] = phase;
            row["from"] = e.from;
            row["to"] = e.to;
            row["delta"] = plan.deltas[k];
            row["remaining"] = remaining;
            row["deviance"] = std::vector<int>(dev.begin() + 1, dev.end());
            rows.push_back(row);
        }
        w.json()["n"] = n;
        w.json()["total_flips"] = plan.total();
        w.json()["total_removed"] = dtg::w_closed_form(n);
        w.json()["rows"] = rows;
    } else {
        std::string hdr = "flip,phase,from,to,delta,remaining";
        for (int v = 1; v <= n; ++v) hdr += ",d" + std::to_string(v);
        w.csv_line(hdr);
        int phase = 1, used = 0;
        long long remaining = dtg::w_closed_form(n);
        for (int k = 0; k < plan.total(); ++k) {
            while (phase <= static_cast<int>(plan.phase_lengths.size()) &&
                   used == plan.phase_lengths[phase - 1]) {
                ++phase;
                used = 0;
            }
            ++used;
            auto e = plan.flips[k];
            ++dev[e.to];
            --dev[e.from];
            remaining -= plan.deltas[k];
            w.csv_line(std::to_string(k + 1) + "," + std::to_string(phase) + "," +
                       std::to_string(e.from) + "," + std::to_string(e.to) + "," +
                       std::to_string(plan.deltas[k]) + "," + std::to_string(remaining) +
                       dev_row());
        }
        w.csv_line("# total_flips=" + std::to_string(plan.total()) +
                   " total_removed=" + std::to_string(dtg::w_closed_form(n)));
    }
    (void)t;
    w.flush();
    return kExitOk;
}

int cmd_kappa(const Globals& g, int min_n, int max_n) {
    ResultWriter w(g, 0);
    auto rows = nlohmann::ordered_json::array();
    if (!w.is_json())
        w.csv_line(
            "n,total_flips,kappa_upper_paper,kappa_upper_exact,kappa_lower_exact,"
            "kappa_lower_paper_asymptotic,x,K");
    for (int n = min_n; n <= max_n; ++n) {
        if (n % 2 == 0) continue;
        auto plan = dtg::build_flip_plan(n);
        auto bd = dtg::block_decomposition(n);
        if (w.is_json()) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["total_flips"] = plan.total();
            row["kappa_upper_paper"] = dtg::kappa_upper_paper(n);
            row["kappa_upper_exact"] = dtg::kappa_upper_exact(n);
            row["kappa_lower_exact"] = dtg::kappa_lower_exact(n);
            row["kappa_lower_paper_asymptotic"] = dtg::kappa_lower_paper_asymptotic(n);
            row["x"] = bd.x;
            row["K"] = bd.K;
            rows.push_back(row);
        } else {
            w.csv_line(std::to_string(n) + "," + std::to_string(plan.total()) + "," +
                       std::to_string(dtg::kappa_upper_paper(n)) + "," +
                       std::to_string(dtg::kappa_upper_exact(n)) + "," +
                       std::to_string(dtg::kappa_lower_exact(n)) + "," +
                       fmt_double(dtg::kappa_lower_paper_asymptotic(n)) + "," +
                       std::to_string(bd.x) + "," + std::to_string(bd.K));
        }
    }
    if (w.is_json()) w.json()["rows"] = rows;
    w.flush();
    return kExitOk;
}

int cmd_bias(const Globals& g, int min_n, int max_n, int bmax) {
    ResultWriter w(g, 0);
    auto rows = nlohmann::ordered_json::array();
    if (!w.is_json()) {
        std::string hdr = "n,w,board_size,lower_bound,upper_bound,es_guarantee";
        for (int b = 1; b <= bmax; ++b) hdr += ",beck_b" + std::to_string(b);
        w.csv_line(hdr);
    }
    for (int n = min_n; n <= max_n; ++n) {
        long long wn = dtg::w_closed_form(n);
        long long X = static_cast<long long>(n) * (n - 1) / 2;
        bool es = dtg::erdos_selfridge_breaker(wn, 3);
        if (w.is_json()) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["w"] = wn;
            row["board_size"] = X;
            row["lower_bound"] = dtg::bias_lower_bound(n);
            row["upper_bound"] = dtg::bias_upper_bound_glazik(n);
            row["es_guarantee"] = es;
            auto beck = nlohmann::ordered_json::array();
            for (int b = 1; b <= bmax; ++b)
                beck.push_back(dtg::beck_maker_biased(1, b, wn, 3, 1, X));
            row["beck_guarantee"] = beck;
            rows.push_back(row);
        } else {
            std::string line = std::to_string(n) + "," + std::to_string(wn) + "," +
                               std::to_string(X) + "," + fmt_double(dtg::bias_lower_bound(n)) +
                               "," + fmt_double(dtg::bias_upper_bound_glazik(n)) + "," +
                               (es ? "true" : "false");
            for (int b = 1; b <= bmax; ++b)
                line += std::string(",") +
                        (dtg::beck_maker_biased(1, b, wn, 3, 1, X) ? "true" : "false");
            w.csv_line(line);
        }
    }
    if (w.is_json()) w.json()["rows"] = rows;
    w.flush();
    return kExitOk;
}

int cmd_embed(const Globals& g, const std::string& board) {
    dtg::Tournament t = parse_board(board, g.seed);
    auto emb = dtg::find_embedding(t);
    ResultWriter w(g, 0);
    if (w.is_json()) {
        if (emb)
            w.json()["embedding"] = std::vector<int>(emb->begin(), emb->end());
        else
            w.json()["embedding"] = nullptr;
    } else {
        w.csv_line("embedding");
        if (emb) {
            std::string s;
            for (int v : *emb) s += (s.empty() ? "" : " ") + std::to_string(v);
            w.csv_line(s);
        } else {
            w.csv_line("none");
        }
    }
    w.flush();
    return kExitOk;
}

int cmd_mc(const Globals& g, const std::string& mode, int n, double p, int trials) {
    dtg::McEstimate est;
    uint64_t budget = g.budget ? g.budget : 10'000'000ull;
    if (mode == "embed")
        est = dtg::mc_embedding_probability(n, p, trials, g.seed, g.jobs);
    else if (mode == "win")
        est = dtg::mc_maker_win(n, p, trials, g.seed, budget, g.jobs);
    else
        throw CLI::ValidationError("mc", "mode must be embed or win");
    ResultWriter w(g, mode == "win" ? budget : 0);
    if (w.is_json()) {
        w.json()["n"] = n;
        w.json()["p"] = p;
        w.json()["trials"] = est.trials;
        w.json()["successes"] = est.successes;
        w.json()["unknowns"] = est.unknowns;
        w.json()["estimate"] = est.estimate;
        w.json()["ci_low"] = est.ci_low;
        w.json()["ci_high"] = est.ci_high;
        w.json()["master_seed"] = est.master_seed;
    } else {
        w.csv_line("n,p,trials,successes,unknowns,estimate,ci_low,ci_high,master_seed");
        w.csv_line(std::to_string(n) + "," + fmt_double(p) + "," + std::to_string(est.trials) +
                   "," + std::to_string(est.successes) + "," + std::to_string(est.unknowns) +
                   "," + fmt_double(est.estimate) + "," + fmt_double(est.ci_low) + "," +
                   fmt_double(est.ci_high) + "," + std::to_string(est.master_seed));
    }
    w.flush();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    Globals g;
    g.argv_line = join_argv(argc, argv);

    CLI::App app{"Maker-Breaker directed-triangle game toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g.seed, "master RNG seed");
    app.add_option("--budget", g.budget, "node budget (0 = command default)");
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    std::string board, maker, breaker, in_path, mode = "embed";
    int bias = 1, n = 7, min_n = 3, max_n = 41, bmax = 3, trials = 100;
    double p = 0.5;
    bool list = false, threshold = false;

    auto* gen = app.add_subcommand("gen", "emit a tournament file");
    gen->add_option("--board", board, "board scheme")->required();

    auto* tri = app.add_subcommand("triangles", "count directed triangles");
    tri->add_option("--board", board, "board scheme")->required();
    tri->add_flag("--list", list, "also enumerate the triangles");

    auto* solve = app.add_subcommand("solve", "exact game adjudication");
    solve->add_option("--board", board, "board scheme")->required();
    solve->add_option("--bias", bias, "Breaker bias b in the (1:b) game");
    solve->add_flag("--threshold", threshold, "find the least b that Breaker wins");

    auto* verify = app.add_subcommand("verify", "certify a script against all replies");
    verify->add_option("--board", board, "board scheme")->required();
    verify->add_option("--maker", maker, "Maker script name");
    verify->add_option("--breaker", breaker, "Breaker script name");
    verify->add_option("--bias", bias, "Breaker bias for Maker verification");

    auto* play = app.add_subcommand("play", "run a scripted game, emit transcript");
    play->add_option("--board", board, "board scheme")->required();
    play->add_option("--maker", maker, "Maker script name (default: lowest free edge)");
    play->add_option("--breaker", breaker, "Breaker script name (default: lowest free edge)");
    play->add_option("--bias", bias, "Breaker bias");

    auto* replay = app.add_subcommand("replay", "validate a transcript");
    replay->add_option("--in", in_path, "transcript file")->required();

    auto* flip = app.add_subcommand("flip", "edge-flip ledger");
    flip->add_option("--n", n, "odd board size")->required();

    auto* kappa = app.add_subcommand("kappa", "flip-count threshold sweep");
    kappa->add_option("--min", min_n, "least n (odd values used)");
    kappa->add_option("--max", max_n, "greatest n");

    auto* biasc = app.add_subcommand("bias", "bias criteria sweep");
    biasc->add_option("--min", min_n, "least n");
    biasc->add_option("--max", max_n, "greatest n");
    biasc->add_option("--bmax", bmax, "largest Breaker bias column");

    auto* embed = app.add_subcommand("embed", "search an order-preserving 7-copy");
    embed->add_option("--board", board, "board scheme")->required();

    auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
    mc->add_option("--mode", mode, "embed or win")->check(CLI::IsMember({"embed", "win"}));
    mc->add_option("--n", n, "host size")->required();
    mc->add_option("--p", p, "edge probability");
    mc->add_option("--trials", trials, "trial count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(g, board);
        if (tri->parsed()) return cmd_triangles(g, board, list);
        if (solve->parsed()) return cmd_solve(g, board, bias, threshold);
        if (verify->parsed()) return cmd_verify(g, board, maker, breaker, bias);
        if (play->parsed()) return cmd_play(g, board, maker, breaker, bias);
        if (replay->parsed()) return cmd_replay(g, in_path);
        if (flip->parsed()) return cmd_flip(g, n);
        if (kappa->parsed()) return cmd_kappa(g, min_n, max_n);
        if (biasc->parsed()) return cmd_bias(g, min_n, max_n, bmax);
        if (embed->parsed()) return cmd_embed(g, board);
        if (mc->parsed()) return cmd_mc(g, mode, n, p, trials);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
