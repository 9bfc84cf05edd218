#pragma once

#include <cstdint>

namespace rgglab {

// Counter-based 64-bit generator: the SplitMix64 finalizer applied to
// seed + (counter+1) * gamma, with the usual SplitMix64 constants
//   gamma = 0x9E3779B97F4A7C15
//   m1    = 0xBF58476D1CE4E5B9
//   m2    = 0x94D049BB133111EB
// Draw i of a stream depends only on (seed, i), so streams can be consumed
// out of order and in parallel while producing identical output.
struct CounterRng {
    std::uint64_t seed = 0;

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t at(std::uint64_t counter) const {
        return mix(seed + (counter + 1) * kGamma);
    }

    // Uniform in [0,1), using the top 53 bits.
    double unit(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }
};

// Derives a child seed from a parent seed and an index.  Used to give every
// sweep trial its own independent stream.
constexpr std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t index) {
    return CounterRng::mix(parent + (index + 1) * CounterRng::kGamma);
}

} // namespace rgglab
