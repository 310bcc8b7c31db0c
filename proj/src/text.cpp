#include "qjpm/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace qjpm {

namespace {

std::string printable(char byte) {
    const auto u = static_cast<unsigned char>(byte);
    if (u >= 0x20 && u < 0x7f) return std::string("'") + byte + "'";
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02x", u);
    return buf;
}

}  // namespace

Alphabet::Alphabet(std::string_view labels) : labels_(labels) {
    if (labels_.empty()) throw std::invalid_argument("alphabet must not be empty");
    index_.fill(-1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const auto u = static_cast<unsigned char>(labels_[i]);
        if (index_[u] != -1)
            throw std::invalid_argument("alphabet has duplicate label " + printable(labels_[i]));
        index_[u] = static_cast<std::int16_t>(i);
    }
}

Alphabet Alphabet::from_text(std::string_view raw) {
    if (raw.empty()) throw std::invalid_argument("cannot derive an alphabet from empty text");
    std::array<bool, 256> seen{};
    for (char c : raw) seen[static_cast<unsigned char>(c)] = true;
    std::string labels;
    for (int b = 0; b < 256; ++b)
        if (seen[b]) labels.push_back(static_cast<char>(b));
    return Alphabet(labels);
}

std::optional<Symbol> Alphabet::index_of(char byte) const {
    const auto i = index_[static_cast<unsigned char>(byte)];
    if (i < 0) return std::nullopt;
    return static_cast<Symbol>(i);
}

IngestedText ingest_text(std::string_view raw,
                         const std::optional<Alphabet>& explicit_alphabet) {
    if (raw.empty()) throw std::invalid_argument("input text must not be empty");
    Alphabet alphabet = explicit_alphabet ? *explicit_alphabet : Alphabet::from_text(raw);
    SymbolString string = map_to_symbols(raw, alphabet);
    return {std::move(string), std::move(alphabet)};
}

SymbolString map_to_symbols(std::string_view raw, const Alphabet& alphabet) {
    SymbolString out;
    out.alphabet_size = static_cast<std::uint32_t>(alphabet.size());
    out.symbols.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto sym = alphabet.index_of(raw[i]);
        if (!sym)
            throw std::invalid_argument("byte " + printable(raw[i]) + " at offset " +
                                        std::to_string(i) + " is not in the alphabet");
        out.symbols.push_back(*sym);
    }
    return out;
}

std::uint64_t ParikhVector::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

std::size_t ParikhVectorHash::operator()(const ParikhVector& p) const {
    // FNV-1a over the count words.
    std::uint64_t h = 14695981039346656037ULL;
    for (std::uint32_t c : p.counts) {
        for (int shift = 0; shift < 32; shift += 8) {
            h ^= (c >> shift) & 0xffu;
            h *= 1099511628211ULL;
        }
    }
    return static_cast<std::size_t>(h);
}

ParikhVector parikh(const SymbolString& s, Position start, std::size_t length) {
    if (start < 1 || start - 1 + length > s.size())
        throw std::invalid_argument("window [" + std::to_string(start) + ", +" +
                                    std::to_string(length) + ") is out of range");
    ParikhVector p;
    p.counts.assign(s.alphabet_size, 0);
    for (std::size_t i = start - 1; i < start - 1 + length; ++i)
        ++p.counts[s.symbols[i]];
    return p;
}

ParikhVector parikh(const SymbolString& s) {
    ParikhVector p;
    p.counts.assign(s.alphabet_size, 0);
    for (Symbol sym : s.symbols) ++p.counts[sym];
    return p;
}

std::vector<Position> sliding_window_matches(const SymbolString& text,
                                             const SymbolString& pattern) {
    if (pattern.empty()) throw std::invalid_argument("pattern must not be empty");
    if (text.size() < pattern.size())
        throw std::invalid_argument("pattern is longer than the text");
    if (text.alphabet_size != pattern.alphabet_size)
        throw std::invalid_argument("text and pattern use different alphabets");

    const std::size_t m = pattern.size();
    const ParikhVector target = parikh(pattern);
    ParikhVector window = parikh(text, 1, m);

    // Number of symbols whose window count differs from the target; zero
    // means the current window is a jumbled match.
    std::size_t mismatched = 0;
    for (std::size_t a = 0; a < window.counts.size(); ++a)
        mismatched += window.counts[a] != target.counts[a];

    std::vector<Position> hits;
    for (Position k = 1;; ++k) {
        if (mismatched == 0) hits.push_back(k);
        if (k + m - 1 == text.size()) break;
        const Symbol out = text.symbols[k - 1];
        const Symbol in = text.symbols[k - 1 + m];
        if (in != out) {
            mismatched -= window.counts[out] != target.counts[out];
            --window.counts[out];
            mismatched += window.counts[out] != target.counts[out];
            mismatched -= window.counts[in] != target.counts[in];
            ++window.counts[in];
            mismatched += window.counts[in] != target.counts[in];
        }
    }
    return hits;
}

}  // namespace qjpm
