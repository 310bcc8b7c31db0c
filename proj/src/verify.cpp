#include "qjpm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qjpm/grover.hpp"
#include "qjpm/instances.hpp"
#include "qjpm/jumbled_index.hpp"
#include "qjpm/prep_circuit.hpp"
#include "qjpm/search.hpp"
#include "qjpm/translation.hpp"

namespace qjpm {

namespace {

// Enumerates all strings of the given length over the alphabet size and
// calls fn on each.
template <typename Fn>
void for_each_string(std::size_t length, std::uint32_t sigma, Fn&& fn) {
    SymbolString s;
    s.alphabet_size = sigma;
    s.symbols.assign(length, 0);
    while (true) {
        fn(s);
        std::size_t i = 0;
        for (; i < length; ++i) {
            if (++s.symbols[i] < sigma) break;
            s.symbols[i] = 0;
        }
        if (i == length) return;
    }
}

CheckResult check_prime_product_theorem() {
    // Every pair of strings of length <= 4 over three prime-coded symbols:
    // equal count vectors exactly when equal products.
    const std::uint32_t sigma = 3;
    const PrimeCodec codec = PrimeCodec::first_primes_codec(sigma);

    std::vector<ParikhVector> parikhs;
    std::vector<Fingerprint> prints;
    for (std::size_t length = 0; length <= 4; ++length)
        for_each_string(length, sigma, [&](const SymbolString& s) {
            parikhs.push_back(parikh(s));
            prints.push_back(fingerprint(s, codec));
        });

    std::size_t pairs = 0;
    for (std::size_t i = 0; i < parikhs.size(); ++i)
        for (std::size_t j = i + 1; j < parikhs.size(); ++j) {
            ++pairs;
            if ((parikhs[i] == parikhs[j]) != (prints[i] == prints[j]))
                return {"prime_product_theorem", false,
                        "partition mismatch at string pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")"};
        }
    return {"prime_product_theorem", true,
            std::to_string(pairs) + " string pairs, partitions identical"};
}

CheckResult check_composite_codec_detected() {
    // Negative control: with composite codes the theorem must fail, and
    // partitions_agree must find a witness. The witness is searched, not
    // hard-coded.
    const PrimeCodec bad = PrimeCodec::from_codes({2, 4, 8});
    for (std::size_t N = 2; N <= 6; ++N)
        for (std::uint32_t M = 2; M <= 3 && M <= N; ++M) {
            bool found = false;
            SymbolString witness_text;
            for_each_string(N, 3, [&](const SymbolString& text) {
                if (found) return;
                const WindowTable parikh_side = window_parikh_table(text, M);
                const WindowTable fp_side = window_fingerprint_table(text, M, bad);
                if (!partitions_agree(parikh_side, fp_side).agree) {
                    found = true;
                    witness_text = text;
                }
            });
            if (found) {
                std::ostringstream detail;
                detail << "codes {2,4,8} break the partition at N=" << N << " M=" << M
                       << " (witness text ";
                for (Symbol s : witness_text.symbols) detail << static_cast<char>('a' + s);
                detail << ")";
                return {"composite_codec_detected", true, detail.str()};
            }
        }
    return {"composite_codec_detected", false,
            "no composite-codec counterexample found; detection is broken"};
}

CheckResult check_window_state_injection() {
    for (std::size_t N : {4, 8})
        for (std::size_t M : {2, 3}) {
            const FullState state = init_window_superposition_full(N, M);
            const std::size_t n = N - M + 1;
            const double expected = 1.0 / std::sqrt(static_cast<double>(n));
            std::size_t nonzero = 0;
            double worst = 0.0;
            for (const Amplitude& a : state.amps) {
                if (std::abs(a) == 0.0) continue;
                ++nonzero;
                worst = std::max(worst, std::abs(std::abs(a) - expected));
            }
            if (nonzero != n || worst > 1e-9)
                return {"window_state_injection", false,
                        "N=" + std::to_string(N) + " M=" + std::to_string(M) + ": " +
                            std::to_string(nonzero) + " nonzero amplitudes (want " +
                            std::to_string(n) + "), worst deviation " + std::to_string(worst)};
        }
    return {"window_state_injection", true,
            "N in {4,8}, M in {2,3}: exactly N-M+1 amplitudes of 1/sqrt(N-M+1)"};
}

CheckResult check_prep_circuit() {
    double worst = 0.0;
    for (std::uint32_t s = 1; s <= 3; ++s)
        for (std::uint32_t M = 1; M <= 3; ++M) {
            FullState zero;
            zero.s = s;
            zero.registers = M;
            zero.amps.assign(std::size_t{1} << (s * M), Amplitude(0.0, 0.0));
            zero.amps[0] = Amplitude(1.0, 0.0);
            const FullState produced = execute(build_cyclic_window_prep(s, M), zero);
            worst = std::max(worst, l2_distance(produced, cyclic_window_state(s, M)));

            if (M <= (std::size_t{1} << s)) {
                const auto cmp = compare_to_eq5(s, M, std::size_t{1} << s);
                if (cmp.boundary_window_count != M - 1)
                    return {"prep_circuit_cyclic", false,
                            "s=" + std::to_string(s) + " M=" + std::to_string(M) + ": " +
                                std::to_string(cmp.boundary_window_count) +
                                " wrap-around windows (want M-1)"};
            }
        }
    if (worst > 1e-9)
        return {"prep_circuit_cyclic", false,
                "circuit state deviates from the analytic superposition by " +
                    std::to_string(worst)};
    return {"prep_circuit_cyclic", true,
            "s<=3, M<=3: circuit == analytic cyclic state (max l2 " + std::to_string(worst) +
                "), wrap-around count always M-1"};
}

CheckResult check_closed_form_grid() {
    // Simulated compressed dynamics against sin^2((2r+1) theta) on a small
    // grid; the acceptance suite runs the bigger one.
    double worst = 0.0;
    for (std::size_t n = 1; n <= 32; ++n)
        for (std::size_t t = 1; t <= n; ++t) {
            std::vector<Position> marked;
            for (std::size_t k = 1; k <= t; ++k)
                marked.push_back(static_cast<Position>(k * n / t));  // spread over [1, n]
            CompressedState state = init_window_superposition_compressed(n);
            for (std::uint64_t r = 0; r <= 10; ++r) {
                if (r > 0) {
                    phase_oracle_marked(state, marked);
                    diffusion_compressed(state);
                }
                const double sim = probability_of_set(state, marked);
                const double ref = success_probability_closed_form(n, t, r);
                worst = std::max(worst, std::abs(sim - ref));
            }
        }
    if (worst > 1e-9)
        return {"closed_form_grid", false, "max deviation " + std::to_string(worst)};
    std::ostringstream detail;
    detail << "n<=32, t<=n, r<=10: max |simulated - closed form| = " << worst;
    return {"closed_form_grid", true, detail.str()};
}

CheckResult check_operator_algebra() {
    // Oracle is an involution; diffusion squares to the identity.
    Rng rng = make_rng(7);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 2 + round;
        CompressedState state;
        state.amps.reserve(n);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Amplitude a(uniform_double(rng) - 0.5, uniform_double(rng) - 0.5);
            state.amps.push_back(a);
            norm += std::norm(a);
        }
        norm = std::sqrt(norm);
        for (Amplitude& a : state.amps) a /= norm;

        std::vector<Position> marked;
        for (Position k = 1; k <= n; ++k)
            if (uniform_double(rng) < 0.3) marked.push_back(k);

        const CompressedState before = state;
        phase_oracle_marked(state, marked);
        phase_oracle_marked(state, marked);
        if (l2_distance(state, before) > 1e-12)
            return {"operator_algebra", false, "oracle applied twice is not the identity"};

        diffusion_compressed(state);
        if (std::abs(norm_squared(state.amps) - 1.0) > 1e-9)
            return {"operator_algebra", false, "diffusion does not preserve the norm"};
        diffusion_compressed(state);
        if (l2_distance(state, before) > 1e-9)
            return {"operator_algebra", false, "diffusion squared is not the identity"};
    }
    return {"operator_algebra", true,
            "20 random states: oracle involutive, diffusion unitary with D^2 = I"};
}

CheckResult check_baselines_agree() {
    Rng rng = make_rng(11);
    std::size_t instances = 0;
    for (int round = 0; round < 200; ++round) {
        const std::size_t N = 1 + uniform_u64(rng, 0, 31);
        const std::size_t M = 1 + uniform_u64(rng, 0, N - 1);
        const auto sigma = static_cast<std::uint32_t>(1 + uniform_u64(rng, 0, 3));
        const SymbolString text = random_string(rng, N, sigma);
        const SymbolString pattern = random_string(rng, M, sigma);

        const auto sliding = sliding_window_matches(text, pattern);

        std::vector<Position> brute;
        const ParikhVector target = parikh(pattern);
        for (Position k = 1; k + M - 1 <= N; ++k)
            if (parikh(text, k, M) == target) brute.push_back(k);

        const auto indexed =
            index_query(build_jumbled_index(text, static_cast<std::uint32_t>(M)), target);

        if (sliding != brute || indexed != brute)
            return {"classical_baselines", false,
                    "baselines disagree on instance " + std::to_string(round)};
        ++instances;
    }
    return {"classical_baselines", true,
            std::to_string(instances) + " random instances: sliding == index == brute force"};
}

CheckResult check_end_to_end_search() {
    const IngestedText text = ingest_text("aabbc");
    const SymbolString pattern = map_to_symbols("ab", text.alphabet);
    const SearchContext ctx = make_search_context(text.string, pattern);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SearchOutcome outcome =
            run_jpm_search(ctx, ScheduleKind::kFixedOptimal, SimMode::kCompressed, seed);
        if (!outcome.is_match || outcome.measured_position != 2)
            return {"end_to_end_search", false,
                    "seed " + std::to_string(seed) + " measured position " +
                        std::to_string(outcome.measured_position)};
    }

    // No-match query: every verdict must be a verified failure.
    const IngestedText text2 = ingest_text("aaaa", Alphabet("ab"));
    const SymbolString pattern2 = map_to_symbols("bb", text2.alphabet);
    const SearchContext ctx2 = make_search_context(text2.string, pattern2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SearchOutcome outcome =
            run_jpm_search(ctx2, ScheduleKind::kMateusRandom, SimMode::kCompressed, seed);
        if (outcome.is_match)
            return {"end_to_end_search", false, "no-match instance reported a match"};
    }
    return {"end_to_end_search", true,
            "100 seeds: certain instance always verified at position 2; "
            "no-match instance never misreported"};
}

CheckResult check_full_mode_m1_matches_compressed() {
    const std::size_t N = 8;
    const std::vector<Position> marked{3, 5};
    double worst = 0.0;
    CompressedState c = init_window_superposition_compressed(N);
    FullState f = init_window_superposition_full(N, 1);
    for (std::uint64_t r = 0; r <= 5; ++r) {
        if (r > 0) {
            phase_oracle_marked(c, marked);
            diffusion_compressed(c);
            phase_oracle_marked(f, marked);
            diffusion_full_first_register(f, N);
        }
        worst = std::max(worst,
                         std::abs(probability_of_set(c, marked) - probability_of_set(f, marked)));
    }
    if (worst > 1e-9)
        return {"full_mode_m1", false, "M=1 full mode deviates by " + std::to_string(worst)};
    return {"full_mode_m1", true,
            "N=8, M=1, r<=5: full and compressed probabilities agree (max gap " +
                std::to_string(worst) + ")"};
}

CheckResult check_network_translation() {
    Rng rng = make_rng(23);
    for (int round = 0; round < 50; ++round) {
        const auto sigma = static_cast<std::uint32_t>(1 + uniform_u64(rng, 0, 4));
        const std::size_t length = 1 + uniform_u64(rng, 0, 7);
        const SymbolString window = random_string(rng, length, sigma);
        const auto [counts, trace] = and_sum_network(window);
        if (!(counts == parikh(window)))
            return {"network_translation", false, "network output differs from direct counts"};
        if (trace.and_gate_count != static_cast<std::uint64_t>(sigma) * window.size() ||
            trace.sum_gate_count != sigma)
            return {"network_translation", false, "gate accounting is off"};
        for (std::size_t i = 0; i < window.size(); ++i) {
            std::uint32_t column = 0;
            for (std::size_t a = 0; a < sigma; ++a) column += trace.indicator[a][i];
            if (column != 1)
                return {"network_translation", false, "indicator column sum is not 1"};
        }
    }
    return {"network_translation", true,
            "50 random windows: network counts == direct counts, |Sigma|*M ANDs, |Sigma| sums"};
}

CheckResult check_measurement_determinism() {
    const CompressedState state = init_window_superposition_compressed(6);
    const auto a = measure_first_register(state, 42, 1000);
    const auto b = measure_first_register(state, 42, 1000);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].outcome != b[i].outcome)
            return {"measurement_determinism", false,
                    "same seed produced different samples at shot " + std::to_string(i)};
    return {"measurement_determinism", true, "1000 shots, same seed: identical outcome streams"};
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
    return {
        check_prime_product_theorem(),
        check_composite_codec_detected(),
        check_window_state_injection(),
        check_prep_circuit(),
        check_closed_form_grid(),
        check_operator_algebra(),
        check_baselines_agree(),
        check_end_to_end_search(),
        check_full_mode_m1_matches_compressed(),
        check_network_translation(),
        check_measurement_determinism(),
    };
}

}  // namespace qjpm
