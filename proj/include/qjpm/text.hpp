#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qjpm {

using Symbol = std::uint32_t;    // 0-based index into an Alphabet
using Position = std::uint32_t;  // 1-based text position

// Ordered finite alphabet over raw bytes. The order given at construction is
// the canonical symbol order everywhere else (count vectors, prime codes).
class Alphabet {
public:
    // Labels must be distinct; their order is preserved.
    explicit Alphabet(std::string_view labels);

    // Alphabet of the distinct bytes of `raw`, in ascending byte order.
    static Alphabet from_text(std::string_view raw);

    std::size_t size() const { return labels_.size(); }
    char label(Symbol i) const { return labels_.at(i); }
    const std::string& labels() const { return labels_; }
    std::optional<Symbol> index_of(char byte) const;

private:
    std::string labels_;
    std::array<std::int16_t, 256> index_{};  // byte -> symbol, -1 when absent
};

// A string already mapped to symbol indices. Every entry is < alphabet_size.
struct SymbolString {
    std::vector<Symbol> symbols;
    std::uint32_t alphabet_size = 0;

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

// Maps raw bytes through the alphabet. Throws std::invalid_argument on any
// byte outside it (message names the offending byte and its offset).
SymbolString map_to_symbols(std::string_view raw, const Alphabet& alphabet);

struct IngestedText {
    SymbolString string;
    Alphabet alphabet;
};

// Maps raw bytes through the given alphabet, or through the sorted set of
// their distinct bytes when none is given.
IngestedText ingest_text(std::string_view raw,
                         const std::optional<Alphabet>& explicit_alphabet = std::nullopt);

// Per-symbol occurrence counts, indexed by symbol. Two strings are jumbled
// matches exactly when their count vectors are equal.
struct ParikhVector {
    std::vector<std::uint32_t> counts;

    bool operator==(const ParikhVector&) const = default;
    std::size_t size() const { return counts.size(); }
    std::uint64_t total() const;
};

struct ParikhVectorHash {
    std::size_t operator()(const ParikhVector& p) const;
};

// Count vector of s[start .. start+length-1], 1-based start.
ParikhVector parikh(const SymbolString& s, Position start, std::size_t length);

// Count vector of the whole string.
ParikhVector parikh(const SymbolString& s);

// All 1-based window starts k with parikh(text, k, |pattern|) == parikh(pattern),
// in increasing order. Single pass with an incrementally updated count vector.
std::vector<Position> sliding_window_matches(const SymbolString& text,
                                             const SymbolString& pattern);

}  // namespace qjpm
