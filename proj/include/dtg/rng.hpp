#pragma once

#include <cstdint>

namespace dtg {

// Deterministic, platform-stable generator. splitmix64 is used both as the
// stream generator and to derive independent per-trial seeds from a master
// seed, so parallel and sequential runs see identical streams.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    SplitMix64 g(master ^ (0xa0761d6478bd642full * (index + 1)));
    g.next();
    return g.next();
}

} // namespace dtg
