#pragma once

#include <cstdint>
#include <vector>

namespace oddsub {

// splitmix64 finalizer; the stable mixing primitive used everywhere.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// splitmix64 stream
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // unbiased value in [0, bound) via rejection
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // true with probability p (53-bit resolution)
    bool coin(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return (next() >> 11) < uint64_t(p * 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[next_below(i)]);
    }

private:
    uint64_t state_;
};

// Stable per-instance sub-seed: instance k of a stream seeded with s.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull));
}

}  // namespace oddsub
