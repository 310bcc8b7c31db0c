#pragma once

#include <cstdint>
#include <random>

namespace qjpm {

// All randomness in the library flows through a seeded mt19937_64 so that
// every run is reproducible from the seed recorded in the output metadata.
inline constexpr const char* kGeneratorName = "mt19937_64";

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Derives the per-trial seed from the root seed. Trials are independent
// streams; XOR keeps the mapping trivial to reproduce by hand.
inline std::uint64_t trial_seed(std::uint64_t root_seed, std::uint64_t trial_index) {
    return root_seed ^ trial_index;
}

// Uniform double in [0, 1) built from the top 53 bits of one draw.
// Used instead of std::uniform_real_distribution, whose output is not
// pinned down by the standard and differs across library implementations.
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi] via rejection sampling, implementation-independent.
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;  // hi >= lo; span 0 means the full 2^64 range
    if (span == 0) return rng();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return lo + draw % span;
}

}  // namespace qjpm
