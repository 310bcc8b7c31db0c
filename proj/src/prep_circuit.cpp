#include "qjpm/prep_circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qjpm {

namespace {

void check_build_size(std::uint32_t s, std::uint32_t M) {
    if (s < 1 || M < 1) throw std::invalid_argument("need s >= 1 and M >= 1");
    const std::uint32_t cap = qubit_cap();
    if (s * M > cap)
        throw std::invalid_argument("circuit needs " + std::to_string(s * M) +
                                    " qubits but the cap is " + std::to_string(cap));
}

}  // namespace

void append_increment(Circuit& circuit, std::uint32_t base, std::uint32_t s) {
    // Bit b flips iff all lower bits are 1; applying top-down reads the
    // original lower bits before they change.
    for (std::uint32_t b = s; b-- > 1;) {
        std::vector<std::uint32_t> controls;
        controls.reserve(b);
        for (std::uint32_t i = 0; i < b; ++i) controls.push_back(base + i);
        if (b == 1)
            circuit.cnot(controls[0], base + b);
        else
            circuit.mcx(std::move(controls), base + b);
    }
    circuit.x(base);
}

Circuit build_cyclic_window_prep(std::uint32_t s, std::uint32_t M) {
    check_build_size(s, M);
    return build_cyclic_window_prep_gates(s, M);
}

Circuit build_cyclic_window_prep_gates(std::uint32_t s, std::uint32_t M) {
    if (s < 1 || M < 1) throw std::invalid_argument("need s >= 1 and M >= 1");

    Circuit circuit;
    circuit.width = s * M;
    const auto reg_base = [&](std::uint32_t j) { return (M - j) * s; };  // j is 1-based

    for (std::uint32_t i = 0; i < s; ++i) circuit.h(reg_base(1) + i);

    // Copy fan: after it every register holds the same branch value k.
    for (std::uint32_t j = 1; j < M; ++j)
        for (std::uint32_t i = 0; i < s; ++i)
            circuit.cnot(reg_base(j) + i, reg_base(j + 1) + i);

    // Register j ends up holding k + (j-1) mod 2^s.
    for (std::uint32_t j = 2; j <= M; ++j)
        for (std::uint32_t pass = 0; pass + 1 < j; ++pass)
            append_increment(circuit, reg_base(j), s);

    return circuit;
}

FullState cyclic_window_state(std::uint32_t s, std::uint32_t M) {
    check_build_size(s, M);

    FullState state;
    state.s = s;
    state.registers = M;
    state.amps.assign(std::size_t{1} << (s * M), Amplitude(0.0, 0.0));

    const std::uint64_t N = std::uint64_t{1} << s;
    const double amp = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::uint64_t k = 0; k < N; ++k) {
        std::uint64_t basis = 0;
        for (std::uint32_t j = 0; j < M; ++j)
            basis |= ((k + j) % N) << ((M - 1 - j) * s);
        state.amps[basis] = Amplitude(amp, 0.0);
    }
    return state;
}

Eq5Comparison compare_to_eq5(std::uint32_t s, std::uint32_t M, std::size_t N) {
    if (N != (std::size_t{1} << s))
        throw std::invalid_argument("expected N = 2^s, got N = " + std::to_string(N));
    if (M > N) throw std::invalid_argument("window size must be <= N");

    FullState zero;
    zero.s = s;
    zero.registers = M;
    zero.amps.assign(std::size_t{1} << (s * M), Amplitude(0.0, 0.0));
    zero.amps[0] = Amplitude(1.0, 0.0);

    Eq5Comparison cmp;
    cmp.cyclic_state = execute(build_cyclic_window_prep(s, M), zero);
    cmp.linear_state = init_window_superposition_full(N, M);
    cmp.l2 = l2_distance(cmp.cyclic_state, cmp.linear_state);

    for (std::size_t k = 0; k < N; ++k)
        if (k + M - 1 >= N) ++cmp.boundary_window_count;
    return cmp;
}

}  // namespace qjpm
