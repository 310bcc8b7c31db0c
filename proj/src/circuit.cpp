#include "qjpm/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qjpm {

namespace {

void check_gate(const Gate& gate, std::uint32_t width) {
    if (gate.target >= width) throw std::invalid_argument("gate target outside circuit width");
    std::vector<bool> used(width, false);
    used[gate.target] = true;
    for (std::uint32_t q : gate.controls) {
        if (q >= width) throw std::invalid_argument("gate control outside circuit width");
        if (used[q]) throw std::invalid_argument("gate controls/target must be disjoint");
        used[q] = true;
    }
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
            if (!gate.controls.empty())
                throw std::invalid_argument("H/X gates take no controls");
            break;
        case GateKind::CNOT:
            if (gate.controls.size() != 1)
                throw std::invalid_argument("CNOT takes exactly one control");
            break;
        case GateKind::MCX:
            if (gate.controls.size() < 2)
                throw std::invalid_argument("MCX takes at least two controls");
            break;
    }
}

std::uint64_t control_mask(const Gate& gate) {
    std::uint64_t mask = 0;
    for (std::uint32_t q : gate.controls) mask |= std::uint64_t{1} << q;
    return mask;
}

void apply_gate(const Gate& gate, std::vector<Amplitude>& amps) {
    const std::uint64_t dim = amps.size();
    const std::uint64_t tmask = std::uint64_t{1} << gate.target;
    const std::uint64_t cmask = control_mask(gate);

    if (gate.kind == GateKind::H) {
        const double inv_sqrt2 = M_SQRT1_2;
        for (std::uint64_t b = 0; b < dim; ++b) {
            if (b & tmask) continue;
            const Amplitude lo = amps[b];
            const Amplitude hi = amps[b | tmask];
            amps[b] = (lo + hi) * inv_sqrt2;
            amps[b | tmask] = (lo - hi) * inv_sqrt2;
        }
        return;
    }

    // X family: swap the target pair wherever all controls are set.
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & tmask) continue;
        if ((b & cmask) == cmask) std::swap(amps[b], amps[b | tmask]);
    }
}

void expand_mcx(const Gate& gate, std::uint32_t width, std::vector<Gate>& out) {
    const std::size_t c = gate.controls.size();
    if (c == 2) {
        out.push_back(gate);
        return;
    }
    if (width < c + 2)
        throw std::invalid_argument("decomposing a " + std::to_string(c) +
                                    "-control MCX needs width >= " + std::to_string(c + 2));

    std::vector<bool> used(width, false);
    used[gate.target] = true;
    for (std::uint32_t q : gate.controls) used[q] = true;
    std::uint32_t borrowed = 0;
    while (used[borrowed]) ++borrowed;

    // MCX(c) = A B A B with A = MCX(first half -> borrowed) and
    // B = MCX(second half + borrowed -> target); the borrowed wire is
    // restored whatever its initial value.
    const std::size_t c1 = (c + 1) / 2;
    Gate a{GateKind::MCX,
           std::vector<std::uint32_t>(gate.controls.begin(), gate.controls.begin() + c1),
           borrowed};
    Gate b{GateKind::MCX,
           std::vector<std::uint32_t>(gate.controls.begin() + c1, gate.controls.end()),
           gate.target};
    b.controls.push_back(borrowed);

    expand_mcx(a, width, out);
    expand_mcx(b, width, out);
    expand_mcx(a, width, out);
    expand_mcx(b, width, out);
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::CNOT: return "CNOT";
        case GateKind::MCX: return "MCX";
    }
    return "?";
}

void Circuit::push(GateKind kind, std::vector<std::uint32_t> controls, std::uint32_t target) {
    Gate gate{kind, std::move(controls), target};
    check_gate(gate, width);
    gates.push_back(std::move(gate));
}

void Circuit::h(std::uint32_t target) { push(GateKind::H, {}, target); }

void Circuit::x(std::uint32_t target) { push(GateKind::X, {}, target); }

void Circuit::cnot(std::uint32_t control, std::uint32_t target) {
    push(GateKind::CNOT, {control}, target);
}

void Circuit::mcx(std::vector<std::uint32_t> controls, std::uint32_t target) {
    push(GateKind::MCX, std::move(controls), target);
}

FullState execute(const Circuit& circuit, const FullState& state) {
    if (circuit.width != state.width())
        throw std::invalid_argument("circuit width " + std::to_string(circuit.width) +
                                    " does not match state width " +
                                    std::to_string(state.width()));
    FullState out = state;
    for (const Gate& gate : circuit.gates) apply_gate(gate, out.amps);
    return out;
}

std::vector<Gate> decompose_mcx(const Gate& gate, std::uint32_t width) {
    if (gate.kind != GateKind::MCX) throw std::invalid_argument("not an MCX gate");
    check_gate(gate, width);
    std::vector<Gate> out;
    expand_mcx(gate, width, out);
    return out;
}

ResourceCount gate_counts(const Circuit& circuit, bool decompose) {
    ResourceCount rc;
    for (const Gate& gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::H: ++rc.h; break;
            case GateKind::X: ++rc.x; break;
            case GateKind::CNOT: ++rc.cnot; break;
            case GateKind::MCX: ++rc.mcx; break;
        }
    }
    if (decompose) {
        rc.decomposed_total = rc.h + rc.x + rc.cnot;
        for (const Gate& gate : circuit.gates) {
            if (gate.kind != GateKind::MCX) continue;
            std::uint64_t cost = 0;
            for (const Gate& g : decompose_mcx(gate, circuit.width)) {
                switch (g.kind) {
                    case GateKind::MCX: cost += kToffoliElementaryGates; break;
                    default: cost += 1; break;
                }
            }
            rc.mcx_costs.emplace_back(static_cast<std::uint32_t>(gate.controls.size()), cost);
            rc.decomposed_total += cost;
        }
    }
    return rc;
}

}  // namespace qjpm
