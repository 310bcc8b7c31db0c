#pragma once

#include <cstdint>
#include <vector>

#include "qjpm/quantum_state.hpp"

namespace qjpm {

// Diagonal phase oracle: negates the amplitude of every marked window index
// (1-based). In full mode a basis state is marked by its first-register
// value. Involutive; norm preserving.
void phase_oracle_marked(CompressedState& state, const std::vector<Position>& marked);
void phase_oracle_marked(FullState& state, const std::vector<Position>& marked);

// Per-symbol oracle: negates basis states whose register j (1-based) points
// at an occurrence of symbol sigma in w. Register values >= |w| never match.
void phase_oracle_symbol(FullState& state, std::uint32_t j, Symbol sigma,
                         const SymbolString& w);

// Inversion about the mean over the window indices.
void diffusion_compressed(CompressedState& state);

// The literal product-form diffusion: inversion about the uniform state on
// the first register only, identity on the rest. Applied slice by slice for
// each trailing-register tuple; leaks amplitude off the window manifold.
void diffusion_full_first_register(FullState& state, std::size_t N);

// r* = floor(pi / (4 asin(sqrt(t/n)))), clamped to >= 0; zero when t = n.
std::uint64_t optimal_iterations(std::size_t n, std::size_t t);

// sin^2((2r+1) asin(sqrt(t/n))): probability that r oracle+diffusion rounds
// on the n-dimensional uniform start state land in the t marked indices.
double success_probability_closed_form(std::size_t n, std::size_t t, std::uint64_t r);

}  // namespace qjpm
