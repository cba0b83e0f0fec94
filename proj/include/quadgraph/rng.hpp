#pragma once

#include <cstdint>

namespace quadgraph {

// Counter-seedable splittable generator.  Sampling code derives one stream
// per sample index so results do not depend on the worker count.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    static SplitMix64 stream(uint64_t seed, uint64_t index) {
        return SplitMix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    }

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), unbiased via rejection.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() {  // uniform in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

}  // namespace quadgraph
