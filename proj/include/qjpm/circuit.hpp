#pragma once

#include <cstdint>
#include <vector>

#include "qjpm/quantum_state.hpp"

namespace qjpm {

enum class GateKind { H, X, CNOT, MCX };

const char* gate_kind_name(GateKind kind);

// One gate. Controls and the single target are disjoint qubit indices,
// all below the circuit width. H and X carry no controls; CNOT exactly one;
// MCX two or more.
struct Gate {
    GateKind kind;
    std::vector<std::uint32_t> controls;
    std::uint32_t target = 0;
};

struct Circuit {
    std::uint32_t width = 0;
    std::vector<Gate> gates;

    void h(std::uint32_t target);
    void x(std::uint32_t target);
    void cnot(std::uint32_t control, std::uint32_t target);
    void mcx(std::vector<std::uint32_t> controls, std::uint32_t target);

private:
    void push(GateKind kind, std::vector<std::uint32_t> controls, std::uint32_t target);
};

// Applies the gates in order to a copy of the state. The circuit width must
// equal the state's total qubit count. Qubit q is bit q of the basis index.
FullState execute(const Circuit& circuit, const FullState& state);

// Expands one MCX into Toffoli/CNOT/X gates with the recursive borrowed-qubit
// split: MCX(c) = [A, B, A, B] with A = MCX(first ceil(c/2) controls -> b)
// and B = MCX(remaining controls + b -> target), b a qubit outside the gate's
// support (no clean ancilla needed; b is restored). Requires width >= c + 2.
std::vector<Gate> decompose_mcx(const Gate& gate, std::uint32_t width);

// Elementary-gate cost charged per Toffoli when expanding MCX gates: the
// standard 6-CNOT + 9-single-qubit circuit over {H, T, Tdagger, CNOT}.
inline constexpr std::uint64_t kToffoliElementaryGates = 15;

struct ResourceCount {
    std::uint64_t h = 0;
    std::uint64_t x = 0;
    std::uint64_t cnot = 0;
    std::uint64_t mcx = 0;
    // Total elementary gates once every MCX is expanded (equals raw_total
    // when the circuit has none). Filled only when counting with decompose.
    std::uint64_t decomposed_total = 0;
    // (control count, elementary cost) per MCX encountered, in circuit order.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> mcx_costs;

    std::uint64_t raw_total() const { return h + x + cnot + mcx; }
};

ResourceCount gate_counts(const Circuit& circuit, bool decompose);

}  // namespace qjpm
