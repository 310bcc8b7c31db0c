#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "qjpm/fingerprint.hpp"
#include "qjpm/text.hpp"

namespace qjpm {

// Classical index of all windows of one size, keyed by count vector.
// Position lists are ascending (windows are inserted left to right).
struct JumbledIndex {
    std::uint32_t window_size = 0;
    std::uint32_t alphabet_size = 0;
    std::unordered_map<ParikhVector, std::vector<Position>, ParikhVectorHash> table;
};

JumbledIndex build_jumbled_index(const SymbolString& text, std::uint32_t window_size);

// Positions whose window has exactly the queried counts; empty when absent.
// The query must have one entry per symbol and total equal to window_size.
std::vector<Position> index_query(const JumbledIndex& index, const ParikhVector& query);

// Same index keyed by fingerprint instead. With a faithful codec the two
// partitions of window positions are identical.
struct FingerprintIndex {
    std::uint32_t window_size = 0;
    std::map<Fingerprint, std::vector<Position>> table;
};

FingerprintIndex build_fingerprint_index(const SymbolString& text, std::uint32_t window_size,
                                         const PrimeCodec& codec);

std::vector<Position> index_query(const FingerprintIndex& index, const Fingerprint& query);

}  // namespace qjpm
