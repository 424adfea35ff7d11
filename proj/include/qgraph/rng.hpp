#pragma once

#include <cstdint>

namespace qgraph {

// 64-bit finalizer used both as the generator step and for stream derivation.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Small deterministic generator (splitmix64). All randomness in the project
// flows through this class so that runs are reproducible bit-exactly across
// platforms; no std:: distributions are used anywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Unbiased uniform draw in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1), 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Counter-based substream derivation: the stream state is the mix64
    // chain over (seed, a, b, c). Used to hand independent streams to
    // trials of a sweep without sharing generator state.
    static Rng stream(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
        uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
        h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
        h = mix64(h ^ (b + 0x6a09e667f3bcc909ULL));
        h = mix64(h ^ (c + 0xbb67ae8584caa73bULL));
        return Rng(h);
    }

private:
    uint64_t state_;
};

}  // namespace qgraph
