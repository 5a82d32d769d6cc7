#pragma once

#include <cstdint>

namespace exflat {

// SplitMix64 (Steele, Lea, Vigna; public-domain constants). This is the
// fixed generator behind every randomized operation in the library: output
// is a pure function of the seed and the draw index, so results are
// identical across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bias-free via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        for (;;) {
            std::uint64_t z = next();
            if (z < limit) return z % bound;
        }
    }

    // Uniform in [-9, 9]; the entry distribution of all random tensors.
    int digit() { return static_cast<int>(below(19)) - 9; }

private:
    std::uint64_t state_;
};

}  // namespace exflat
