#include "qjpm/fingerprint.hpp"

#include <set>
#include <stdexcept>

namespace qjpm {

namespace {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    primes.reserve(count);
    for (std::uint64_t v = 2; primes.size() < count; ++v)
        if (is_prime(v)) primes.push_back(v);
    return primes;
}

PrimeCodec::PrimeCodec(std::vector<std::uint64_t> codes) : codes_(std::move(codes)) {
    if (codes_.empty()) throw std::invalid_argument("codec must not be empty");
    std::set<std::uint64_t> seen;
    faithful_ = true;
    for (auto c : codes_) {
        if (c < 2) throw std::invalid_argument("codes must be >= 2");
        faithful_ = faithful_ && is_prime(c) && seen.insert(c).second;
    }
}

PrimeCodec PrimeCodec::first_primes_codec(std::size_t alphabet_size) {
    return PrimeCodec(first_primes(alphabet_size));
}

PrimeCodec PrimeCodec::from_codes(std::vector<std::uint64_t> codes) {
    return PrimeCodec(std::move(codes));
}

Fingerprint fingerprint(const SymbolString& s, const PrimeCodec& codec) {
    if (codec.size() != s.alphabet_size)
        throw std::invalid_argument("codec size does not match the alphabet");
    Fingerprint f = 1;
    for (Symbol sym : s.symbols) f *= codec.code(sym);
    return f;
}

Fingerprint fingerprint(const ParikhVector& p, const PrimeCodec& codec) {
    if (codec.size() != p.size())
        throw std::invalid_argument("codec size does not match the count vector");
    Fingerprint f = 1;
    for (std::size_t i = 0; i < p.counts.size(); ++i)
        for (std::uint32_t k = 0; k < p.counts[i]; ++k) f *= codec.code(static_cast<Symbol>(i));
    return f;
}

}  // namespace qjpm
