#include "qjpm/grover.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qjpm {

void phase_oracle_marked(CompressedState& state, const std::vector<Position>& marked) {
    for (Position k : marked) {
        if (k < 1 || k > state.dim())
            throw std::invalid_argument("marked position " + std::to_string(k) +
                                        " is out of range");
        state.amps[k - 1] = -state.amps[k - 1];
    }
}

void phase_oracle_marked(FullState& state, const std::vector<Position>& marked) {
    const std::uint64_t N = std::uint64_t{1} << state.s;
    std::vector<bool> is_marked(N, false);
    for (Position k : marked) {
        if (k < 1 || k > N)
            throw std::invalid_argument("marked position " + std::to_string(k) +
                                        " is out of range");
        is_marked[k - 1] = true;
    }
    const std::uint32_t shift = (state.registers - 1) * state.s;
    for (std::size_t b = 0; b < state.dim(); ++b)
        if (is_marked[b >> shift]) state.amps[b] = -state.amps[b];
}

void phase_oracle_symbol(FullState& state, std::uint32_t j, Symbol sigma,
                         const SymbolString& w) {
    if (j < 1 || j > state.registers)
        throw std::invalid_argument("register index " + std::to_string(j) +
                                    " is out of range");
    if (sigma >= w.alphabet_size) throw std::invalid_argument("symbol outside the alphabet");

    const std::uint32_t shift = (state.registers - j) * state.s;
    const std::uint64_t mask = (std::uint64_t{1} << state.s) - 1;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const std::uint64_t pos = (b >> shift) & mask;  // 0-based letter index
        if (pos < w.size() && w.symbols[pos] == sigma) state.amps[b] = -state.amps[b];
    }
}

void diffusion_compressed(CompressedState& state) {
    Amplitude mean(0.0, 0.0);
    for (const Amplitude& a : state.amps) mean += a;
    mean /= static_cast<double>(state.dim());
    for (Amplitude& a : state.amps) a = 2.0 * mean - a;
}

void diffusion_full_first_register(FullState& state, std::size_t N) {
    if (N != (std::size_t{1} << state.s))
        throw std::invalid_argument("diffusion dimension does not match the register width");

    const std::uint32_t shift = (state.registers - 1) * state.s;
    const std::uint64_t slice_count = std::uint64_t{1} << shift;  // trailing-register tuples
    for (std::uint64_t tail = 0; tail < slice_count; ++tail) {
        Amplitude mean(0.0, 0.0);
        for (std::uint64_t v = 0; v < N; ++v) mean += state.amps[(v << shift) | tail];
        mean /= static_cast<double>(N);
        for (std::uint64_t v = 0; v < N; ++v) {
            Amplitude& a = state.amps[(v << shift) | tail];
            a = 2.0 * mean - a;
        }
    }
}

std::uint64_t optimal_iterations(std::size_t n, std::size_t t) {
    if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
    if (t == n) return 0;
    const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
    return static_cast<std::uint64_t>(std::floor(M_PI / (4.0 * theta)));
}

double success_probability_closed_form(std::size_t n, std::size_t t, std::uint64_t r) {
    if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
    const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
    const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta);
    return s * s;
}

}  // namespace qjpm
