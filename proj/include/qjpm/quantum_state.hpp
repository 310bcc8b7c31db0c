#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qjpm/text.hpp"

namespace qjpm {

using Amplitude = std::complex<double>;

// Largest allowed total qubit count for full-mode states. Reads the
// QJPM_QUBIT_CAP environment variable on each call; defaults to 16
// (vectors of at most 65536 amplitudes).
std::uint32_t qubit_cap();

inline constexpr double kNormTolerance = 1e-9;

// State over window indices k = 1..n only (dimension n = N-M+1). amps[k-1]
// is the amplitude of window k.
struct CompressedState {
    std::vector<Amplitude> amps;

    std::size_t dim() const { return amps.size(); }
};

// State over M registers of s qubits each (dimension 2^{sM}). Register j
// (1-based) occupies bits [(M-j)s, (M-j)s + s) of the basis index, so
// register 1 is the most significant block and basis index
// b = i_1 << (M-1)s | ... | i_M encodes the tuple (i_1, ..., i_M).
// Register values are 0-based positions; external reporting adds 1.
struct FullState {
    std::uint32_t s = 0;
    std::uint32_t registers = 0;
    std::vector<Amplitude> amps;

    std::size_t dim() const { return amps.size(); }
    std::uint32_t width() const { return s * registers; }
    std::uint64_t register_value(std::uint64_t basis, std::uint32_t j) const;
};

// Uniform real superposition over n window indices, amplitudes 1/sqrt(n).
CompressedState init_window_superposition_compressed(std::size_t n);

// Full-mode injection of the linear-window tuple state: amplitude
// 1/sqrt(N-M+1) on each tuple (k, k+1, ..., k+M-1) for 0-based k in
// [0, N-M], zero elsewhere. Requires N = 2^s and s*M within the qubit cap.
FullState init_window_superposition_full(std::size_t N, std::size_t M);

struct MeasurementSample {
    Position outcome = 0;  // 1-based first-register value
    std::uint32_t shot_index = 0;
    std::uint64_t seed = 0;
};

// Marginal probability distribution of the first register: length n for
// compressed states, length 2^s for full states.
std::vector<double> first_register_marginal(const CompressedState& state);
std::vector<double> first_register_marginal(const FullState& state);

// Draws `shots` i.i.d. samples from the first-register marginal via inverse
// CDF over one seeded generator. The state is not modified; each shot
// resamples the same distribution. Rejects states whose norm deviates from 1
// by more than 1e-6.
std::vector<MeasurementSample> measure_first_register(const CompressedState& state,
                                                      std::uint64_t rng_seed,
                                                      std::size_t shots);
std::vector<MeasurementSample> measure_first_register(const FullState& state,
                                                      std::uint64_t rng_seed,
                                                      std::size_t shots);

// Sum of first-register marginal probabilities over 1-based positions.
double probability_of_set(const CompressedState& state, const std::vector<Position>& positions);
double probability_of_set(const FullState& state, const std::vector<Position>& positions);

double norm_squared(const std::vector<Amplitude>& amps);

// Euclidean distance between amplitude vectors of equal dimension.
double l2_distance(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b);
double l2_distance(const CompressedState& a, const CompressedState& b);
double l2_distance(const FullState& a, const FullState& b);

}  // namespace qjpm
