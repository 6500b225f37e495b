#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dtg {

// Vertices are 1-based throughout: V = {1, ..., n}.
struct DirectedEdge {
    int from = 0;
    int to = 0;

    bool operator==(const DirectedEdge&) const = default;
};

struct ScoreVector {
    std::vector<int> scores;         // out-degrees, index 0 -> vertex 1
    std::vector<int> twice_deviance; // 2 * (s_i - (n-1)/2), integral for all n

    // deviance s_i - (n-1)/2; only well defined when n is odd
    int deviance(int vertex) const { return twice_deviance[vertex - 1] / 2; }
};

using Triangle = std::array<int, 3>; // canonical: smallest vertex first

// A tournament stores one orientation per unordered pair {i,j}, i<j, as an
// upper-triangular boolean array in row-major pair order. true means i->j.
// The pair index doubles as the stable element id of the game hypergraph
// and as the bit order of the text file format.
class Tournament {
public:
    static Tournament parity(int n);
    static Tournament transitive(int n);
    static Tournament random(int n, double p, uint64_t seed);

    int size() const { return n_; }
    int pair_count() const { return static_cast<int>(up_.size()); }

    static int pair_count(int n) { return n * (n - 1) / 2; }

    // lexicographic pair order: (1,2),(1,3),...,(1,n),(2,3),...
    int pair_index(int i, int j) const;
    std::pair<int, int> pair_at(int index) const;

    bool has_edge(int from, int to) const;
    DirectedEdge edge_at(int pair_index) const; // the oriented edge of that pair

    // Returns a copy with e reversed; e must currently be present.
    Tournament flipped(DirectedEdge e) const;

    ScoreVector score_vector() const;

    // a < b, a < c, b != c required
    bool is_directed_triangle(int a, int b, int c) const;

    // all directed triangles, canonical form, lexicographic order
    std::vector<Triangle> triangles() const;

    // Moon's identity: C(n,3) - sum_i C(s_i,2)
    long long count_triangles_moon() const;

    std::string to_text() const;
    static Tournament from_text(const std::string& text);

    bool operator==(const Tournament&) const = default;

private:
    Tournament(int n, std::vector<uint8_t> up) : n_(n), up_(std::move(up)) {}

    int n_ = 0;
    std::vector<uint8_t> up_;
};

// Number of directed triangles in the parity tournament:
// (n^3-n)/24 for odd n, (n^3-4n)/24 for even n.
long long w_closed_form(long long n);

// The same count as a ceiling-product sum; independent route for testing.
long long w_ceiling_sum(long long n);

} // namespace dtg
