#include "qjpm/translation.hpp"

#include <stdexcept>
#include <unordered_set>

namespace qjpm {

namespace {

void check_window_size(const SymbolString& text, std::uint32_t M) {
    if (M == 0 || M > text.size())
        throw std::invalid_argument("window size must be in [1, |text|]");
}

}  // namespace

std::size_t WindowTable::windows() const {
    return parikh.empty() ? fingerprints.size() : parikh.size();
}

WindowTable window_parikh_table(const SymbolString& text, std::uint32_t M) {
    check_window_size(text, M);
    WindowTable table;
    table.window_size = M;
    table.alphabet_size = text.alphabet_size;

    ParikhVector window = parikh(text, 1, M);
    for (Position k = 1;; ++k) {
        table.parikh.push_back(window);
        if (k + M - 1 == text.size()) break;
        --window.counts[text.symbols[k - 1]];
        ++window.counts[text.symbols[k - 1 + M]];
    }
    return table;
}

WindowTable window_fingerprint_table(const SymbolString& text, std::uint32_t M,
                                     const PrimeCodec& codec) {
    check_window_size(text, M);
    if (codec.size() != text.alphabet_size)
        throw std::invalid_argument("codec size does not match the alphabet");

    WindowTable table;
    table.window_size = M;
    table.alphabet_size = text.alphabet_size;

    SymbolString first{std::vector<Symbol>(text.symbols.begin(), text.symbols.begin() + M),
                       text.alphabet_size};
    Fingerprint f = fingerprint(first, codec);
    for (Position k = 1;; ++k) {
        table.fingerprints.push_back(f);
        if (k + M - 1 == text.size()) break;
        // The leaving symbol's code divides f by construction; a nonzero
        // remainder would be a defect, not bad input.
        const Fingerprint leaving(codec.code(text.symbols[k - 1]));
        Fingerprint quotient, remainder;
        boost::multiprecision::divide_qr(f, leaving, quotient, remainder);
        if (remainder != 0)
            throw std::logic_error("window fingerprint update lost exact divisibility");
        f = quotient * codec.code(text.symbols[k - 1 + M]);
    }
    return table;
}

WindowTable window_table(const SymbolString& text, std::uint32_t M, const PrimeCodec& codec) {
    WindowTable table = window_parikh_table(text, M);
    table.fingerprints = window_fingerprint_table(text, M, codec).fingerprints;
    return table;
}

std::pair<ParikhVector, NetworkTrace> and_sum_network(const SymbolString& window) {
    if (window.empty()) throw std::invalid_argument("window must not be empty");

    NetworkTrace trace;
    trace.indicator.assign(window.alphabet_size, std::vector<bool>(window.size(), false));
    for (std::size_t a = 0; a < window.alphabet_size; ++a)
        for (std::size_t i = 0; i < window.size(); ++i) {
            trace.indicator[a][i] = window.symbols[i] == a;
            ++trace.and_gate_count;
        }

    ParikhVector p;
    p.counts.assign(window.alphabet_size, 0);
    for (std::size_t a = 0; a < window.alphabet_size; ++a) {
        for (std::size_t i = 0; i < window.size(); ++i)
            p.counts[a] += trace.indicator[a][i];
        ++trace.sum_gate_count;
    }
    return {std::move(p), std::move(trace)};
}

std::vector<Position> marked_set(const WindowTable& table, const ParikhVector& query) {
    if (table.parikh.empty())
        throw std::invalid_argument("table has no count-vector side");
    if (query.size() != table.alphabet_size)
        throw std::invalid_argument("query has the wrong alphabet size");
    if (query.total() != table.window_size)
        throw std::invalid_argument("query counts do not sum to the window size");

    std::vector<Position> marked;
    for (std::size_t i = 0; i < table.parikh.size(); ++i)
        if (table.parikh[i] == query) marked.push_back(static_cast<Position>(i + 1));
    return marked;
}

std::vector<Position> marked_set(const WindowTable& table, const Fingerprint& query) {
    if (table.fingerprints.empty())
        throw std::invalid_argument("table has no fingerprint side");
    if (query < 1) throw std::invalid_argument("fingerprint query must be >= 1");

    std::vector<Position> marked;
    for (std::size_t i = 0; i < table.fingerprints.size(); ++i)
        if (table.fingerprints[i] == query) marked.push_back(static_cast<Position>(i + 1));
    return marked;
}

PartitionComparison partitions_agree(const WindowTable& parikh_side,
                                     const WindowTable& fingerprint_side) {
    if (parikh_side.parikh.empty() || fingerprint_side.fingerprints.empty())
        throw std::invalid_argument("need a count-vector table and a fingerprint table");
    const std::size_t n = parikh_side.parikh.size();
    if (n != fingerprint_side.fingerprints.size() ||
        parikh_side.window_size != fingerprint_side.window_size)
        throw std::invalid_argument("tables describe different window sets");

    PartitionComparison cmp;
    for (std::size_t i = 0; i < n && cmp.agree; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same_parikh = parikh_side.parikh[i] == parikh_side.parikh[j];
            const bool same_fp = fingerprint_side.fingerprints[i] == fingerprint_side.fingerprints[j];
            if (same_parikh != same_fp) {
                cmp.agree = false;
                cmp.witness = {static_cast<Position>(i + 1), static_cast<Position>(j + 1)};
                break;
            }
        }
    return cmp;
}

std::size_t distinct_parikh_count(const WindowTable& table) {
    std::unordered_set<ParikhVector, ParikhVectorHash> distinct(table.parikh.begin(),
                                                                table.parikh.end());
    return distinct.size();
}

}  // namespace qjpm
