#pragma once

#include "qjpm/rng.hpp"
#include "qjpm/text.hpp"

namespace qjpm {

struct PlantedInstance {
    SymbolString text;
    SymbolString pattern;
    std::vector<Position> matches;  // the exact classical match set, |matches| = target
};

SymbolString random_string(Rng& rng, std::size_t length, std::uint32_t alphabet_size);

// Uniform random text with `target_matches` planted windows, each a fresh
// random permutation of the random pattern, planted non-overlapping;
// instances with accidental extra or missing matches are resampled until the
// classical match count is exactly the target. Throws after max_attempts
// resamples (caller picked an infeasible density).
PlantedInstance gen_planted_instance(Rng& rng, std::size_t N, std::size_t M,
                                     std::uint32_t alphabet_size, std::size_t target_matches,
                                     std::uint32_t max_attempts = 200);

}  // namespace qjpm
