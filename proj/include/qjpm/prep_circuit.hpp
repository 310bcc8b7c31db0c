#pragma once

#include "qjpm/circuit.hpp"

namespace qjpm {

// Builds the preparation circuit: s Hadamards on register 1, a CNOT fan
// copying register j onto register j+1, then j-1 ripple +1 (mod 2^s) passes
// on each register j >= 2. On |0...0> it prepares the cyclic-window state
//   2^{-s/2} sum_k |k, k+1 mod 2^s, ..., k+M-1 mod 2^s>.
// Enforces the qubit cap (the circuit is meant to be executed).
Circuit build_cyclic_window_prep(std::uint32_t s, std::uint32_t M);

// Same gate list without the cap check, for resource counting only; no
// amplitude vector is ever allocated for it.
Circuit build_cyclic_window_prep_gates(std::uint32_t s, std::uint32_t M);

// Appends one +1 (mod 2^s) pass on the s qubits starting at absolute bit
// `base` (LSB first): MCX ripple from the top bit down, X on the LSB.
void append_increment(Circuit& circuit, std::uint32_t base, std::uint32_t s);

// The analytic cyclic-window superposition the circuit should produce.
FullState cyclic_window_state(std::uint32_t s, std::uint32_t M);

struct Eq5Comparison {
    FullState cyclic_state;   // executed from the built circuit
    FullState linear_state;   // the injected linear-window tuple state
    double l2 = 0.0;
    std::uint32_t boundary_window_count = 0;  // cyclic windows that wrap
};

// Quantifies the gap between the circuit's cyclic windows (2^s of them) and
// the linear-window state (N-M+1 of them): exactly the M-1 wrap-around
// windows differ. Requires N = 2^s and M <= N.
Eq5Comparison compare_to_eq5(std::uint32_t s, std::uint32_t M, std::size_t N);

}  // namespace qjpm
