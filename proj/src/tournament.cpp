#include "dtg/tournament.hpp"

#include <sstream>
#include <stdexcept>

#include "dtg/rng.hpp"

namespace dtg {

static void check_n(int n) {
    if (n < 1) throw std::invalid_argument("tournament size must be >= 1");
}

Tournament Tournament::parity(int n) {
    check_n(n);
    std::vector<uint8_t> up;
    up.reserve(pair_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            up.push_back(static_cast<uint8_t>((i + j) % 2 == 1));
    return Tournament(n, std::move(up));
}

Tournament Tournament::transitive(int n) {
    check_n(n);
    // vertex 1 beats all: i->j for every i<j
    return Tournament(n, std::vector<uint8_t>(pair_count(n), 1));
}

Tournament Tournament::random(int n, double p, uint64_t seed) {
    check_n(n);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<uint8_t> up;
    up.reserve(pair_count(n));
    for (int k = 0; k < pair_count(n); ++k)
        up.push_back(static_cast<uint8_t>(rng.next_double() < p));
    return Tournament(n, std::move(up));
}

int Tournament::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j) throw std::out_of_range("bad vertex pair");
    // offset of row i plus column within the row
    return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
}

std::pair<int, int> Tournament::pair_at(int index) const {
    if (index < 0 || index >= pair_count()) throw std::out_of_range("bad pair index");
    int i = 1;
    int row = n_ - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + index};
}

bool Tournament::has_edge(int from, int to) const {
    bool lo_hi = up_[pair_index(from, to)] != 0;
    return from < to ? lo_hi : !lo_hi;
}

DirectedEdge Tournament::edge_at(int pair_index) const {
    auto [i, j] = pair_at(pair_index);
    return up_[pair_index] ? DirectedEdge{i, j} : DirectedEdge{j, i};
}

Tournament Tournament::flipped(DirectedEdge e) const {
    if (e.from == e.to || e.from < 1 || e.to < 1 || e.from > n_ || e.to > n_)
        throw std::invalid_argument("bad edge");
    if (!has_edge(e.from, e.to))
        throw std::invalid_argument("edge has opposite orientation");
    Tournament t = *this;
    int k = pair_index(e.from, e.to);
    t.up_[k] = static_cast<uint8_t>(!t.up_[k]);
    return t;
}

ScoreVector Tournament::score_vector() const {
    ScoreVector sv;
    sv.scores.assign(n_, 0);
    for (int k = 0; k < pair_count(); ++k) sv.scores[edge_at(k).from - 1]++;
    sv.twice_deviance.resize(n_);
    for (int i = 0; i < n_; ++i) sv.twice_deviance[i] = 2 * sv.scores[i] - (n_ - 1);
    return sv;
}

bool Tournament::is_directed_triangle(int a, int b, int c) const {
    if (a == b || b == c || a == c) throw std::invalid_argument("vertices must be distinct");
    return has_edge(a, b) && has_edge(b, c) && has_edge(c, a);
}

std::vector<Triangle> Tournament::triangles() const {
    std::vector<Triangle> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b)
            for (int c = b + 1; c <= n_; ++c) {
                // with a minimal, the cycle runs either a->b->c->a or a->c->b->a
                if (is_directed_triangle(a, b, c))
                    out.push_back({a, b, c});
                else if (is_directed_triangle(a, c, b))
                    out.push_back({a, c, b});
            }
    return out;
}

long long Tournament::count_triangles_moon() const {
    auto choose2 = [](long long s) { return s * (s - 1) / 2; };
    long long n = n_;
    long long total = n * (n - 1) * (n - 2) / 6;
    for (int s : score_vector().scores) total -= choose2(s);
    return total;
}

std::string Tournament::to_text() const {
    std::ostringstream os;
    os << n_ << '\n';
    for (uint8_t b : up_) os << (b ? '1' : '0');
    os << '\n';
    return os.str();
}

Tournament Tournament::from_text(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    std::string bits;
    if (!(is >> n) || n < 1) throw std::invalid_argument("bad tournament file: size line");
    if (n > 1 && !(is >> bits)) throw std::invalid_argument("bad tournament file: missing bits");
    if (static_cast<int>(bits.size()) != pair_count(n))
        throw std::invalid_argument("bad tournament file: bit count mismatch");
    std::vector<uint8_t> up(bits.size());
    for (size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != '0' && bits[k] != '1')
            throw std::invalid_argument("bad tournament file: invalid character");
        up[k] = static_cast<uint8_t>(bits[k] == '1');
    }
    return Tournament(n, std::move(up));
}

long long w_closed_form(long long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return n % 2 == 1 ? (n * n * n - n) / 24 : (n * n * n - 4 * n) / 24;
}

long long w_ceiling_sum(long long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    long long total = 0;
    for (long long i = 1; i <= n - 2; ++i) total += ((i + 1) / 2) * ((n - i) / 2);
    return total;
}

} // namespace dtg
