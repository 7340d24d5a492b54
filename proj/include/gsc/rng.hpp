#pragma once

#include <cstdint>

namespace gsc {

// SplitMix64: tiny splittable generator; the seed fully determines the stream.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

private:
    uint64_t state_;
};

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Independent stream for a shard; deterministic in (seed, shard).
inline SplitMix64 shard_stream(uint64_t seed, uint64_t shard) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull * (shard + 1)));
}

}  // namespace gsc
