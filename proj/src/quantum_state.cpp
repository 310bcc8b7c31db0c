#include "qjpm/quantum_state.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qjpm/rng.hpp"

namespace qjpm {

namespace {

constexpr double kMeasureNormTolerance = 1e-6;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint32_t log2_exact(std::size_t v) {
    std::uint32_t s = 0;
    while ((std::size_t{1} << s) < v) ++s;
    return s;
}

void check_measurable(const std::vector<double>& marginal) {
    double total = 0.0;
    for (double p : marginal) total += p;
    if (std::abs(total - 1.0) > kMeasureNormTolerance)
        throw std::invalid_argument("state is not normalized (total probability " +
                                    std::to_string(total) + ")");
}

std::vector<MeasurementSample> sample_marginal(const std::vector<double>& marginal,
                                               std::uint64_t rng_seed, std::size_t shots) {
    if (shots == 0) throw std::invalid_argument("shots must be >= 1");
    check_measurable(marginal);

    // Fallback for the < 1e-6 rounding gap at the top of the CDF: the last
    // outcome that actually has probability mass.
    std::size_t last_support = 0;
    for (std::size_t i = 0; i < marginal.size(); ++i)
        if (marginal[i] > 0.0) last_support = i;

    Rng rng = make_rng(rng_seed);
    std::vector<MeasurementSample> samples;
    samples.reserve(shots);
    for (std::size_t shot = 0; shot < shots; ++shot) {
        const double u = uniform_double(rng);
        double cdf = 0.0;
        std::size_t outcome = last_support;
        for (std::size_t i = 0; i < marginal.size(); ++i) {
            cdf += marginal[i];
            if (u < cdf) {
                outcome = i;
                break;
            }
        }
        samples.push_back({static_cast<Position>(outcome + 1),
                           static_cast<std::uint32_t>(shot), rng_seed});
    }
    return samples;
}

double set_probability(const std::vector<double>& marginal,
                       const std::vector<Position>& positions) {
    double p = 0.0;
    for (Position pos : positions) {
        if (pos < 1 || pos > marginal.size())
            throw std::invalid_argument("position " + std::to_string(pos) + " is out of range");
        p += marginal[pos - 1];
    }
    return p;
}

}  // namespace

std::uint32_t qubit_cap() {
    const char* raw = std::getenv("QJPM_QUBIT_CAP");
    if (raw == nullptr || *raw == '\0') return 16;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 30)
        throw std::invalid_argument("QJPM_QUBIT_CAP must be an integer in [1, 30], got \"" +
                                    std::string(raw) + "\"");
    return static_cast<std::uint32_t>(value);
}

std::uint64_t FullState::register_value(std::uint64_t basis, std::uint32_t j) const {
    const std::uint32_t shift = (registers - j) * s;
    return (basis >> shift) & ((std::uint64_t{1} << s) - 1);
}

CompressedState init_window_superposition_compressed(std::size_t n) {
    if (n == 0) throw std::invalid_argument("no windows: pattern is longer than the text");
    CompressedState state;
    state.amps.assign(n, Amplitude(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    return state;
}

FullState init_window_superposition_full(std::size_t N, std::size_t M) {
    if (!is_power_of_two(N))
        throw std::invalid_argument("full mode requires the text length to be a power of two");
    if (M < 1 || M > N) throw std::invalid_argument("window size must be in [1, N]");

    const std::uint32_t s = log2_exact(N);
    const std::uint32_t cap = qubit_cap();
    const std::uint64_t width = static_cast<std::uint64_t>(s) * M;
    if (width > cap)
        throw std::invalid_argument("state needs " + std::to_string(width) +
                                    " qubits but the cap is " + std::to_string(cap));

    FullState state;
    state.s = s;
    state.registers = static_cast<std::uint32_t>(M);
    state.amps.assign(std::size_t{1} << width, Amplitude(0.0, 0.0));

    const std::size_t n = N - M + 1;
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t basis = 0;
        for (std::size_t j = 0; j < M; ++j) basis |= static_cast<std::uint64_t>(k + j) << ((M - 1 - j) * s);
        state.amps[basis] = Amplitude(amp, 0.0);
    }
    return state;
}

std::vector<double> first_register_marginal(const CompressedState& state) {
    std::vector<double> marginal(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) marginal[i] = std::norm(state.amps[i]);
    return marginal;
}

std::vector<double> first_register_marginal(const FullState& state) {
    std::vector<double> marginal(std::size_t{1} << state.s, 0.0);
    const std::uint32_t shift = (state.registers - 1) * state.s;
    for (std::size_t b = 0; b < state.dim(); ++b)
        marginal[b >> shift] += std::norm(state.amps[b]);
    return marginal;
}

std::vector<MeasurementSample> measure_first_register(const CompressedState& state,
                                                      std::uint64_t rng_seed,
                                                      std::size_t shots) {
    return sample_marginal(first_register_marginal(state), rng_seed, shots);
}

std::vector<MeasurementSample> measure_first_register(const FullState& state,
                                                      std::uint64_t rng_seed,
                                                      std::size_t shots) {
    return sample_marginal(first_register_marginal(state), rng_seed, shots);
}

double probability_of_set(const CompressedState& state, const std::vector<Position>& positions) {
    return set_probability(first_register_marginal(state), positions);
}

double probability_of_set(const FullState& state, const std::vector<Position>& positions) {
    return set_probability(first_register_marginal(state), positions);
}

double norm_squared(const std::vector<Amplitude>& amps) {
    double total = 0.0;
    for (const Amplitude& a : amps) total += std::norm(a);
    return total;
}

double l2_distance(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
    return std::sqrt(sum);
}

double l2_distance(const CompressedState& a, const CompressedState& b) {
    return l2_distance(a.amps, b.amps);
}

double l2_distance(const FullState& a, const FullState& b) {
    if (a.s != b.s || a.registers != b.registers)
        throw std::invalid_argument("dimension mismatch");
    return l2_distance(a.amps, b.amps);
}

}  // namespace qjpm
