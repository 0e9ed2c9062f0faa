#pragma once

#include <cstdint>

namespace ph0 {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Output finalizer of SplitMix64: two xor-shift-multiply rounds and a final
// xor-shift. Also used on its own to derive decorrelated seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// SplitMix64 generator (Steele/Lea/Burton). State advances by the golden
// gamma; every draw finalizes a copy of the state with mix64. The same seed
// produces the same stream on every platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() { return mix64(state_ += kGoldenGamma); }

    // Uniform double in the open interval (0,1): top 53 bits over 2^53,
    // exact zeros rejected so boundary values never appear.
    constexpr double next_unit_open() {
        for (;;) {
            const std::uint64_t top = next() >> 11;
            if (top != 0) return static_cast<double>(top) * 0x1.0p-53;
        }
    }

    // std::uniform_random_bit_generator interface
    using result_type = std::uint64_t;
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }
    constexpr std::uint64_t operator()() { return next(); }

private:
    std::uint64_t state_;
};

} // namespace ph0
