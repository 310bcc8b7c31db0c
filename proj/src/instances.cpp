#include "qjpm/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace qjpm {

namespace {

// Fisher-Yates on a copy, driven by the portable draw helper so instances
// reproduce across standard libraries.
std::vector<Symbol> shuffled(std::vector<Symbol> v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_u64(rng, 0, i - 1)]);
    return v;
}

}  // namespace

SymbolString random_string(Rng& rng, std::size_t length, std::uint32_t alphabet_size) {
    if (length == 0 || alphabet_size == 0)
        throw std::invalid_argument("need length >= 1 and alphabet size >= 1");
    SymbolString s;
    s.alphabet_size = alphabet_size;
    s.symbols.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        s.symbols.push_back(static_cast<Symbol>(uniform_u64(rng, 0, alphabet_size - 1)));
    return s;
}

PlantedInstance gen_planted_instance(Rng& rng, std::size_t N, std::size_t M,
                                     std::uint32_t alphabet_size, std::size_t target_matches,
                                     std::uint32_t max_attempts) {
    if (M < 1 || M > N) throw std::invalid_argument("need 1 <= M <= N");
    if (target_matches * M > N)
        throw std::invalid_argument("cannot plant " + std::to_string(target_matches) +
                                    " non-overlapping windows of size " + std::to_string(M) +
                                    " into length " + std::to_string(N));

    for (std::uint32_t attempt = 0; attempt < max_attempts; ++attempt) {
        PlantedInstance inst;
        inst.pattern = random_string(rng, M, alphabet_size);
        inst.text = random_string(rng, N, alphabet_size);

        // Pick non-overlapping 0-based plant sites by rejection.
        std::vector<std::size_t> sites;
        bool placed = true;
        for (std::size_t planted = 0; planted < target_matches; ++planted) {
            bool found = false;
            for (std::uint32_t tries = 0; tries < 200 && !found; ++tries) {
                const std::size_t k = uniform_u64(rng, 0, N - M);
                found = true;
                for (std::size_t other : sites)
                    if (k < other + M && other < k + M) {
                        found = false;
                        break;
                    }
                if (found) sites.push_back(k);
            }
            if (!found) {
                placed = false;
                break;
            }
        }
        if (!placed) continue;

        std::vector<bool> reserved(N, false);
        for (std::size_t site : sites) {
            const std::vector<Symbol> plant = shuffled(inst.pattern.symbols, rng);
            for (std::size_t i = 0; i < M; ++i) {
                inst.text.symbols[site + i] = plant[i];
                reserved[site + i] = true;
            }
        }

        // Accidental matches are resampled in place (only outside the planted
        // windows) instead of throwing the whole text away; dense parameter
        // choices would otherwise almost never realize an exact count.
        bool repaired = true;
        for (std::uint32_t round = 0; round < max_attempts && repaired; ++round) {
            inst.matches = sliding_window_matches(inst.text, inst.pattern);
            if (inst.matches.size() == target_matches) return inst;
            repaired = false;
            for (Position match : inst.matches) {
                const std::size_t start = match - 1;
                if (std::find(sites.begin(), sites.end(), start) != sites.end()) continue;
                for (std::size_t i = start; i < start + M; ++i) {
                    if (reserved[i]) continue;
                    inst.text.symbols[i] =
                        static_cast<Symbol>(uniform_u64(rng, 0, alphabet_size - 1));
                    repaired = true;
                }
            }
        }
    }
    throw std::runtime_error("instance generator failed to hit the target match count in " +
                             std::to_string(max_attempts) + " attempts");
}

}  // namespace qjpm
