#pragma once

#include <cstdint>

namespace pcb {

/// Deterministic 64-bit generator (splitmix64). The full output stream is a
/// pure function of the seed, independent of platform and standard library,
/// which is what the reproducibility contract of seeds relies on.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    bool coin() { return next() >> 63; }

    /// Uniform value in [0, bound) by masked rejection; bound >= 1.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const uint64_t r = next() & mask;
            if (r < bound) return r;
        }
    }

private:
    uint64_t state_;
};

} // namespace pcb
