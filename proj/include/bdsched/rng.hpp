#pragma once

#include <cstdint>

namespace bdsched {

// splitmix64. Fixed across platforms so seeded corpora reproduce bit-for-bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n), rejection-free 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // next() / 2^64, rounded to the nearest double.
    double next_real() { return static_cast<double>(next()) * 0x1p-64; }

private:
    std::uint64_t state_;
};

}  // namespace bdsched
