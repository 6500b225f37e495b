#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "dtg/hypergraph.hpp"
#include "dtg/tournament.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("DTG_CLI");
    REQUIRE_MESSAGE(p != nullptr, "DTG_CLI must point at the tool binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("gen").exit_code == 2);            // missing --board
    CHECK(run("gen --board nope:5").exit_code == 2);
    CHECK(run("solve --board parity:abc").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("gen emits the bit-exact board file format") {
    auto r = run("gen --board parity:5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == dtg::Tournament::parity(5).to_text());

    auto r2 = run("gen --board random:9:0.5:33");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == dtg::Tournament::random(9, 0.5, 33).to_text());
}

TEST_CASE("board files round-trip through the file scheme") {
    std::string path = "/tmp/dtg_cli_board.txt";
    CHECK(run("gen --board parity:7 --out " + path).exit_code == 0);
    auto r = run("triangles --board file:" + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("7,14,14") != std::string::npos);
}

TEST_CASE("result files embed tool version, argv, seed and budget") {
    auto r = run("triangles --board parity:5 --seed 11");
    CHECK(r.out.find("# tool=") != std::string::npos);
    CHECK(r.out.find("# argv=") != std::string::npos);
    CHECK(r.out.find("# seed=11") != std::string::npos);
    CHECK(r.out.find("# budget=") != std::string::npos);

    auto j = run("triangles --board parity:5 --format json");
    CHECK(j.out.find("\"tool\"") != std::string::npos);
    CHECK(j.out.find("\"argv\"") != std::string::npos);
}

TEST_CASE("identical argv and seed give byte-identical outputs") {
    std::string a = "/tmp/dtg_cli_a.csv", b = "/tmp/dtg_cli_b.csv";
    std::string args = "mc --mode embed --n 20 --p 0.5 --trials 50 --seed 5 --out ";
    CHECK(run(args + a).exit_code == 0);
    CHECK(run(args + b).exit_code == 0);
    std::string ca = slurp(a), cb = slurp(b);
    // only the --out path differs inside the argv header line
    CHECK(ca.size() == cb.size());
    auto strip = [](std::string s) {
        size_t from = s.find("# argv=");
        size_t to = s.find('\n', from);
        return s.erase(from, to - from);
    };
    CHECK(strip(ca) == strip(cb));
}

TEST_CASE("solve and verify exit codes") {
    CHECK(run("solve --board parity:6").exit_code == 0);
    CHECK(run("solve --board parity:7 --budget 100").exit_code == 3);
    CHECK(run("verify --board parity:5 --breaker pairing").exit_code == 0);
    CHECK(run("verify --board parity:7 --maker pi7").exit_code == 0);
    CHECK(run("verify --board parity:7 --maker pi7 --budget 100").exit_code == 3);
    CHECK(run("verify --board parity:7").exit_code == 2); // neither side given
}

TEST_CASE("flip ledger output for the seven-vertex board") {
    auto r = run("flip --n 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1,1,7,1,1,13,1,0,0,0,0,0,-1") != std::string::npos);
    CHECK(r.out.find("5,2,4,2,2,5,3,2,-1,-1,-1,-1,-1") != std::string::npos);
    CHECK(r.out.find("9,5,7,5,1,0,3,2,1,0,-1,-2,-3") != std::string::npos);
    CHECK(r.out.find("total_removed=14") != std::string::npos);
    CHECK(run("flip --n 6").exit_code == 2); // even boards rejected
}

TEST_CASE("kappa and bias sweeps emit the documented columns") {
    auto k = run("kappa --min 7 --max 13");
    CHECK(k.exit_code == 0);
    CHECK(k.out.find("n,total_flips,kappa_upper_paper,kappa_upper_exact,kappa_lower_exact,"
                     "kappa_lower_paper_asymptotic,x,K") != std::string::npos);
    CHECK(k.out.find("7,9,6,7,0,") != std::string::npos);

    auto b = run("bias --min 47 --max 47");
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("n,w,board_size,lower_bound,upper_bound,es_guarantee") !=
          std::string::npos);
    CHECK(b.out.find("47,4324,1081,2,") != std::string::npos);
}

TEST_CASE("play emits a transcript that replay accepts") {
    std::string path = "/tmp/dtg_cli_game.json";
    CHECK(run("play --board parity:7 --maker pi7 --out " + path).exit_code == 0);
    CHECK(run("replay --in " + path).exit_code == 0);

    // tamper: make the second move re-claim the first move's edge
    dtg::Transcript tr = dtg::Transcript::from_json(slurp(path));
    REQUIRE(tr.moves.size() >= 2);
    tr.moves[1].edges = tr.moves[0].edges;
    std::ofstream f("/tmp/dtg_cli_tampered.json", std::ios::binary);
    f << tr.to_json();
    f.close();
    CHECK(run("replay --in /tmp/dtg_cli_tampered.json").exit_code == 1);
}

TEST_CASE("embed and mc outputs") {
    auto e = run("embed --board parity:9");
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("1 2 3 4 5 6 7") != std::string::npos);
    auto none = run("embed --board transitive:30");
    CHECK(none.exit_code == 0);
    CHECK(none.out.find("none") != std::string::npos);

    auto mc = run("mc --mode win --n 30 --p 0.5 --trials 5 --seed 3");
    CHECK(mc.exit_code == 0);
    CHECK(mc.out.find("n,p,trials,successes,unknowns,estimate,ci_low,ci_high,master_seed") !=
          std::string::npos);
    CHECK(mc.out.find("30,0.5,5,") != std::string::npos);
}
