#pragma once

#include <cstdint>

// Fixed deterministic PRNG used everywhere randomness is needed so that
// outputs reproduce bit-for-bit across platforms and standard libraries.
// Algorithm: xoshiro256** 1.0 (Blackman/Vigna), state expanded from a
// single 64-bit seed with splitmix64.

namespace subjam::rng {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-1, 1).
    double uniform_pm1() {
        return 2.0 * uniform01() - 1.0;
    }

    /// Uniform integer in [0, n). n must be > 0.
    uint64_t bounded(uint64_t n) {
        // Rejection-free modulo; bias is irrelevant for channel shuffles
        // but determinism across builds is required.
        return next() % n;
    }

private:
    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t s_[4];
};

}  // namespace subjam::rng
