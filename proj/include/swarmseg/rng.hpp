#pragma once

#include <cstdint>

namespace swarmseg {

// splitmix64 (Vigna 2015). 64 bits of state, passes BigCrush, and the whole
// sequence is a pure function of the seed, so runs replay bit-exactly on any
// platform. First output for seed 0 is 0xE220A8397B1DCDAF.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace swarmseg
