#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qjpm/circuit.hpp"
#include "qjpm/prep_circuit.hpp"

using namespace qjpm;

namespace {

constexpr double kTol = 1e-12;

// |basis> as a full state of `width` qubits (s=1 per register keeps the
// executor's bit semantics front and center).
FullState basis_state(std::uint32_t width, std::uint64_t basis) {
    FullState state;
    state.s = 1;
    state.registers = width;
    state.amps.assign(std::size_t{1} << width, Amplitude(0.0, 0.0));
    state.amps[basis] = Amplitude(1.0, 0.0);
    return state;
}

std::uint64_t sole_basis(const FullState& state) {
    std::uint64_t found = state.dim();
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        if (std::abs(state.amps[b]) < kTol) continue;
        REQUIRE(std::abs(state.amps[b] - Amplitude(1.0, 0.0)) < kTol);
        REQUIRE(found == state.dim());  // only one nonzero amplitude allowed
        found = b;
    }
    REQUIRE(found < state.dim());
    return found;
}

}  // namespace

TEST_CASE("gate construction validates wires") {
    Circuit c;
    c.width = 3;
    CHECK_NOTHROW(c.h(0));
    CHECK_NOTHROW(c.cnot(1, 2));
    CHECK_NOTHROW(c.mcx({0, 1}, 2));
    CHECK_THROWS_AS(c.h(3), std::invalid_argument);             // beyond width
    CHECK_THROWS_AS(c.cnot(1, 1), std::invalid_argument);       // overlapping wires
    CHECK_THROWS_AS(c.mcx({0, 0}, 2), std::invalid_argument);   // repeated control
    CHECK_THROWS_AS(c.mcx({0}, 2), std::invalid_argument);      // too few controls
    CHECK(gate_kind_name(GateKind::MCX) == std::string("MCX"));
}

TEST_CASE("executor semantics on basis states") {
    // Empty circuit is the identity.
    Circuit empty;
    empty.width = 2;
    const FullState in = basis_state(2, 0b10);
    CHECK(l2_distance(execute(empty, in), in) == 0.0);

    // X flips its bit.
    Circuit flip;
    flip.width = 2;
    flip.x(0);
    CHECK(sole_basis(execute(flip, basis_state(2, 0b00))) == 0b01);

    // CNOT truth table (control is bit 1).
    Circuit cx;
    cx.width = 2;
    cx.cnot(1, 0);
    CHECK(sole_basis(execute(cx, basis_state(2, 0b00))) == 0b00);
    CHECK(sole_basis(execute(cx, basis_state(2, 0b01))) == 0b01);
    CHECK(sole_basis(execute(cx, basis_state(2, 0b10))) == 0b11);
    CHECK(sole_basis(execute(cx, basis_state(2, 0b11))) == 0b10);

    // MCX fires only when every control is set.
    Circuit ccx;
    ccx.width = 3;
    ccx.mcx({2, 1}, 0);
    for (std::uint64_t b = 0; b < 8; ++b) {
        const std::uint64_t expect = (b & 0b110) == 0b110 ? (b ^ 1) : b;
        CHECK(sole_basis(execute(ccx, basis_state(3, b))) == expect);
    }

    // Width mismatch between circuit and state is a defect.
    CHECK_THROWS_AS(execute(cx, basis_state(3, 0)), std::invalid_argument);
}

TEST_CASE("H butterfly: superposition and involution") {
    Circuit h;
    h.width = 1;
    h.h(0);
    const FullState plus = execute(h, basis_state(1, 0));
    CHECK(std::abs(plus.amps[0] - Amplitude(M_SQRT1_2, 0.0)) < kTol);
    CHECK(std::abs(plus.amps[1] - Amplitude(M_SQRT1_2, 0.0)) < kTol);

    Circuit hh;
    hh.width = 1;
    hh.h(0);
    hh.h(0);
    CHECK(l2_distance(execute(hh, basis_state(1, 0)), basis_state(1, 0)) < 1e-12);
}

TEST_CASE("borrowed-qubit expansion preserves the MCX action exactly") {
    for (std::uint32_t width = 4; width <= 6; ++width) {
        for (std::uint32_t controls = 2; controls + 2 <= width; ++controls) {
            Gate gate;
            gate.kind = GateKind::MCX;
            for (std::uint32_t c = 0; c < controls; ++c) gate.controls.push_back(c + 1);
            gate.target = 0;

            Circuit direct;
            direct.width = width;
            direct.gates.push_back(gate);

            Circuit expanded;
            expanded.width = width;
            expanded.gates = decompose_mcx(gate, width);
            for (const Gate& g : expanded.gates)
                CHECK(g.controls.size() <= 2);  // nothing past Toffoli survives

            for (std::uint64_t b = 0; b < (std::uint64_t{1} << width); ++b) {
                const FullState in = basis_state(width, b);
                CHECK(l2_distance(execute(direct, in), execute(expanded, in)) < 1e-9);
            }
        }
    }
    // Toffolis are primitive: a two-control gate survives untouched even
    // with no spare wire.
    Gate toffoli;
    toffoli.kind = GateKind::MCX;
    toffoli.controls = {1, 2};
    toffoli.target = 0;
    const std::vector<Gate> same = decompose_mcx(toffoli, 3);
    REQUIRE(same.size() == 1);
    CHECK(same[0].controls == toffoli.controls);

    // Past two controls the split needs a borrowable wire.
    Gate tight;
    tight.kind = GateKind::MCX;
    tight.controls = {1, 2, 3};
    tight.target = 0;
    CHECK_THROWS_AS(decompose_mcx(tight, 4), std::invalid_argument);
}

TEST_CASE("resource counting: raw and decomposed totals") {
    Circuit c;
    c.width = 6;
    c.h(0);
    c.x(1);
    c.cnot(0, 1);
    c.mcx({0, 1}, 2);        // Toffoli: 15 elementary
    c.mcx({0, 1, 2}, 3);     // 3 controls -> 4 Toffolis = 60
    c.mcx({0, 1, 2, 3}, 4);  // 4 controls -> 10 Toffolis = 150

    const ResourceCount raw = gate_counts(c, false);
    CHECK(raw.h == 1);
    CHECK(raw.x == 1);
    CHECK(raw.cnot == 1);
    CHECK(raw.mcx == 3);
    CHECK(raw.raw_total() == 6);
    CHECK(raw.decomposed_total == 0);  // not requested

    const ResourceCount dec = gate_counts(c, true);
    CHECK(dec.mcx_costs ==
          std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 15}, {3, 60}, {4, 150}});
    CHECK(dec.decomposed_total == 3 + 15 + 60 + 150);
    CHECK(dec.decomposed_total >= dec.raw_total());
}

TEST_CASE("increment pass adds one modulo 2^s") {
    for (std::uint32_t s = 1; s <= 3; ++s) {
        Circuit inc;
        inc.width = s;
        append_increment(inc, 0, s);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
            const std::uint64_t expect = (v + 1) & ((std::uint64_t{1} << s) - 1);
            CHECK(sole_basis(execute(inc, basis_state(s, v))) == expect);
        }
    }
}

TEST_CASE("preparation circuit: pinned shapes") {
    // s=1, M=1 is one Hadamard and nothing else.
    const Circuit h = build_cyclic_window_prep(1, 1);
    REQUIRE(h.gates.size() == 1);
    CHECK(h.gates[0].kind == GateKind::H);
    const FullState out = execute(h, basis_state(1, 0));
    CHECK(std::abs(out.amps[0] - Amplitude(M_SQRT1_2, 0.0)) < kTol);
    CHECK(std::abs(out.amps[1] - Amplitude(M_SQRT1_2, 0.0)) < kTol);

    // s=2, M=2 golden counts fixed by the builder.
    const ResourceCount rc = gate_counts(build_cyclic_window_prep(2, 2), true);
    CHECK(rc.h == 2);
    CHECK(rc.x == 1);
    CHECK(rc.cnot == 3);
    CHECK(rc.mcx == 0);
    CHECK(rc.decomposed_total == 6);
}

TEST_CASE("preparation circuit output: cyclic tuples with equal amplitude") {
    // s=2, M=2: amplitude 1/2 on (k, k+1 mod 4).
    FullState zero;
    zero.s = 2;
    zero.registers = 2;
    zero.amps.assign(16, Amplitude(0.0, 0.0));
    zero.amps[0] = Amplitude(1.0, 0.0);
    const FullState got = execute(build_cyclic_window_prep(2, 2), zero);
    for (std::uint64_t k = 0; k < 4; ++k) {
        const std::uint64_t tuple = (k << 2) | ((k + 1) & 3);
        CHECK(std::abs(got.amps[tuple] - Amplitude(0.5, 0.0)) < kTol);
    }
    CHECK(l2_distance(got, cyclic_window_state(2, 2)) < 1e-12);

    // s=2, M=3: tuples (k, k+1 mod 4, k+2 mod 4).
    const FullState three = execute(build_cyclic_window_prep(2, 3), [] {
        FullState z;
        z.s = 2;
        z.registers = 3;
        z.amps.assign(64, Amplitude(0.0, 0.0));
        z.amps[0] = Amplitude(1.0, 0.0);
        return z;
    }());
    for (std::uint64_t k = 0; k < 4; ++k) {
        const std::uint64_t tuple = (k << 4) | (((k + 1) & 3) << 2) | ((k + 2) & 3);
        CHECK(std::abs(three.amps[tuple] - Amplitude(0.5, 0.0)) < kTol);
    }
    CHECK(l2_distance(three, cyclic_window_state(2, 3)) < 1e-12);
}

TEST_CASE("gap between cyclic and linear window states") {
    // M=1: no wrap-around windows, the states coincide.
    const Eq5Comparison same = compare_to_eq5(2, 1, 4);
    CHECK(same.boundary_window_count == 0);
    CHECK(same.l2 < 1e-12);

    // N=4, M=2: one wrap window; distance fixed by exact amplitude arithmetic:
    // sqrt(3*(1/2 - 1/sqrt(3))^2 + 1/4).
    const Eq5Comparison gap = compare_to_eq5(2, 2, 4);
    CHECK(gap.boundary_window_count == 1);
    const double d = std::sqrt(3.0 * std::pow(0.5 - 1.0 / std::sqrt(3.0), 2) + 0.25);
    CHECK(gap.l2 == doctest::Approx(d).epsilon(1e-12));

    // N=4, M=4: all but one window wraps.
    CHECK(compare_to_eq5(2, 4, 4).boundary_window_count == 3);

    CHECK_THROWS_AS(compare_to_eq5(2, 2, 5), std::invalid_argument);  // N != 2^s
}

TEST_CASE("gate growth is monotone in s and M") {
    std::uint64_t prev = 0;
    for (std::uint32_t s = 1; s <= 4; ++s) {
        const std::uint64_t total = gate_counts(build_cyclic_window_prep_gates(s, 3), true)
                                        .decomposed_total;
        CHECK(total >= prev);
        prev = total;
    }
    // The uncapped builder must agree with the executable one where both exist.
    const Circuit capped = build_cyclic_window_prep(3, 3);
    const Circuit uncapped = build_cyclic_window_prep_gates(3, 3);
    CHECK(capped.gates.size() == uncapped.gates.size());
    // ... and exist beyond the cap (resource counting only).
    CHECK_NOTHROW(build_cyclic_window_prep_gates(10, 8));
    CHECK_THROWS_AS(build_cyclic_window_prep(10, 8), std::invalid_argument);
}
