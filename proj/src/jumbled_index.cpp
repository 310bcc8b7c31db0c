#include "qjpm/jumbled_index.hpp"

#include <stdexcept>

namespace qjpm {

JumbledIndex build_jumbled_index(const SymbolString& text, std::uint32_t window_size) {
    if (window_size == 0 || window_size > text.size())
        throw std::invalid_argument("window size must be in [1, |text|]");
    JumbledIndex idx;
    idx.window_size = window_size;
    idx.alphabet_size = text.alphabet_size;

    ParikhVector window = parikh(text, 1, window_size);
    for (Position k = 1;; ++k) {
        idx.table[window].push_back(k);
        if (k + window_size - 1 == text.size()) break;
        --window.counts[text.symbols[k - 1]];
        ++window.counts[text.symbols[k - 1 + window_size]];
    }
    return idx;
}

std::vector<Position> index_query(const JumbledIndex& index, const ParikhVector& query) {
    if (query.size() != index.alphabet_size)
        throw std::invalid_argument("query has the wrong alphabet size");
    if (query.total() != index.window_size)
        throw std::invalid_argument("query counts do not sum to the window size");
    const auto it = index.table.find(query);
    if (it == index.table.end()) return {};
    return it->second;
}

FingerprintIndex build_fingerprint_index(const SymbolString& text, std::uint32_t window_size,
                                         const PrimeCodec& codec) {
    if (window_size == 0 || window_size > text.size())
        throw std::invalid_argument("window size must be in [1, |text|]");
    if (codec.size() != text.alphabet_size)
        throw std::invalid_argument("codec size does not match the alphabet");

    FingerprintIndex idx;
    idx.window_size = window_size;

    SymbolString first{std::vector<Symbol>(text.symbols.begin(),
                                           text.symbols.begin() + window_size),
                       text.alphabet_size};
    Fingerprint f = fingerprint(first, codec);
    for (Position k = 1;; ++k) {
        idx.table[f].push_back(k);
        if (k + window_size - 1 == text.size()) break;
        // Exact division: the leaving symbol's code always divides f.
        f /= codec.code(text.symbols[k - 1]);
        f *= codec.code(text.symbols[k - 1 + window_size]);
    }
    return idx;
}

std::vector<Position> index_query(const FingerprintIndex& index, const Fingerprint& query) {
    const auto it = index.table.find(query);
    if (it == index.table.end()) return {};
    return it->second;
}

}  // namespace qjpm
