#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qjpm/fingerprint.hpp"
#include "qjpm/text.hpp"

namespace qjpm {

// Classical shadow of the window-to-count-vector translation, one entry per
// window start k (1-based). Translation is index-preserving: conceptually
// |k>|0> -> |k>|P_k>, never discarding k, so equal windows keep distinct
// index amplitudes and the oracle stays a diagonal marking on k.
// Either side (count vectors, fingerprints) may be absent depending on which
// builder produced the table.
struct WindowTable {
    std::uint32_t window_size = 0;
    std::uint32_t alphabet_size = 0;
    std::vector<ParikhVector> parikh;       // indexed k-1; may be empty
    std::vector<Fingerprint> fingerprints;  // indexed k-1; may be empty

    std::size_t windows() const;
};

// AND/sum network bookkeeping: the indicator matrix has one row per symbol
// and one column per window position; each column has exactly one true cell.
struct NetworkTrace {
    std::uint64_t and_gate_count = 0;
    std::uint64_t sum_gate_count = 0;
    std::vector<std::vector<bool>> indicator;  // [symbol][position]
};

WindowTable window_parikh_table(const SymbolString& text, std::uint32_t M);

WindowTable window_fingerprint_table(const SymbolString& text, std::uint32_t M,
                                     const PrimeCodec& codec);

// Both sides at once, for the equivalence checks and table dumps.
WindowTable window_table(const SymbolString& text, std::uint32_t M, const PrimeCodec& codec);

// Translates one window through the bipartite network: |Sigma| x M symbol
// equality tests (the AND edges), then one sum per symbol row. The count
// vector always equals parikh() of the window.
std::pair<ParikhVector, NetworkTrace> and_sum_network(const SymbolString& window);

// Windows whose translation equals the query, ascending. The two query forms
// induce the same set whenever the codec is faithful.
std::vector<Position> marked_set(const WindowTable& table, const ParikhVector& query);
std::vector<Position> marked_set(const WindowTable& table, const Fingerprint& query);

struct PartitionComparison {
    bool agree = true;
    // First witness (k, k') with one side equal and the other not.
    std::optional<std::pair<Position, Position>> witness;
};

// Checks that count-vector equality and fingerprint equality induce the same
// partition of window indices.
PartitionComparison partitions_agree(const WindowTable& parikh_side,
                                     const WindowTable& fingerprint_side);

// Size of the derived window-vector alphabet: the number of distinct window
// count vectors. Always <= number of windows.
std::size_t distinct_parikh_count(const WindowTable& table);

}  // namespace qjpm
