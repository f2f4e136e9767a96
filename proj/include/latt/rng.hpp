#pragma once

#include <cstdint>

namespace latt {

// splitmix64. Every random decision in the library flows from one of these,
// seeded from a user seed plus a stream index, so results never depend on
// thread scheduling or job count.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    int range(int lo, int hi) {  // inclusive
        return lo + int(below(uint64_t(hi - lo + 1)));
    }

    // independent substream for instance #i of a suite
    static Rng stream(uint64_t seed, uint64_t index) {
        Rng mix(seed ^ (0xa0761d6478bd642full * (index + 1)));
        mix.next();
        return mix;
    }
};

}  // namespace latt
