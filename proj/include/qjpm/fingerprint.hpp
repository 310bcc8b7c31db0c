#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "qjpm/text.hpp"

namespace qjpm {

// Exact arbitrary-precision integer. Fingerprints are products of per-symbol
// codes with no modular reduction, so equality of fingerprints must be exact.
using Fingerprint = boost::multiprecision::cpp_int;

// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

// Assigns each symbol an integer code >= 2. The standard codec maps symbol i
// to the i-th prime, which makes the fingerprint a faithful encoding of the
// count vector (unique factorization). from_codes allows arbitrary codes for
// experiments that demonstrate why primality matters.
class PrimeCodec {
public:
    static PrimeCodec first_primes_codec(std::size_t alphabet_size);
    static PrimeCodec from_codes(std::vector<std::uint64_t> codes);

    std::size_t size() const { return codes_.size(); }
    std::uint64_t code(Symbol i) const { return codes_.at(i); }
    const std::vector<std::uint64_t>& codes() const { return codes_; }

    // True when every code is prime and no code repeats.
    bool faithful() const { return faithful_; }

private:
    explicit PrimeCodec(std::vector<std::uint64_t> codes);

    std::vector<std::uint64_t> codes_;
    bool faithful_ = false;
};

// Product of the codes of all symbols of s (1 for the empty string).
Fingerprint fingerprint(const SymbolString& s, const PrimeCodec& codec);

// Fingerprint of a count vector: prod code(i)^counts[i].
Fingerprint fingerprint(const ParikhVector& p, const PrimeCodec& codec);

}  // namespace qjpm
