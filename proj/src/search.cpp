#include "qjpm/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qjpm/grover.hpp"
#include "qjpm/quantum_state.hpp"
#include "qjpm/translation.hpp"

namespace qjpm {

namespace {

Position sample_position(const std::vector<double>& marginal, Rng& rng) {
    std::size_t last_support = 0;
    for (std::size_t i = 0; i < marginal.size(); ++i)
        if (marginal[i] > 0.0) last_support = i;
    const double u = uniform_double(rng);
    double cdf = 0.0;
    for (std::size_t i = 0; i < marginal.size(); ++i) {
        cdf += marginal[i];
        if (u < cdf) return static_cast<Position>(i + 1);
    }
    return static_cast<Position>(last_support + 1);
}

bool verify_position(const SearchContext& ctx, Position k) {
    if (k < 1 || k > ctx.n) return false;  // dead window or leakage outcome
    // One exact count-vector comparison against the query.
    return std::binary_search(ctx.marked.begin(), ctx.marked.end(), k);
}

// One prepare-iterate-measure attempt; r oracle+diffusion rounds.
Position run_attempt_compressed(const SearchContext& ctx, std::uint64_t r, Rng& rng) {
    CompressedState state = init_window_superposition_compressed(ctx.n);
    for (std::uint64_t i = 0; i < r; ++i) {
        phase_oracle_marked(state, ctx.marked);
        diffusion_compressed(state);
    }
    return sample_position(first_register_marginal(state), rng);
}

Position run_attempt_full(const SearchContext& ctx, std::uint64_t r, Rng& rng) {
    FullState state = init_window_superposition_full(ctx.N, ctx.M);
    for (std::uint64_t i = 0; i < r; ++i) {
        phase_oracle_marked(state, ctx.marked);
        diffusion_full_first_register(state, ctx.N);
    }
    return sample_position(first_register_marginal(state), rng);
}

Position run_attempt(const SearchContext& ctx, SimMode mode, std::uint64_t r, Rng& rng) {
    return mode == SimMode::kCompressed ? run_attempt_compressed(ctx, r, rng)
                                        : run_attempt_full(ctx, r, rng);
}

// Reflection 2|a⟩⟨a| − I about a fixed reference state.
void reflect_about(FullState& state, const FullState& axis) {
    Amplitude overlap(0.0, 0.0);
    for (std::size_t b = 0; b < state.dim(); ++b)
        overlap += std::conj(axis.amps[b]) * state.amps[b];
    const Amplitude twice = 2.0 * overlap;
    for (std::size_t b = 0; b < state.dim(); ++b)
        state.amps[b] = twice * axis.amps[b] - state.amps[b];
}

std::uint64_t mateus_range(std::size_t n) {
    const auto root = static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(n))));
    return root < 1 ? 1 : root;
}

}  // namespace

const char* schedule_name(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::kFixedOptimal: return "fixed";
        case ScheduleKind::kMateusRandom: return "mateus";
        case ScheduleKind::kBbht: return "bbht";
    }
    return "?";
}

const char* mode_name(SimMode mode) {
    return mode == SimMode::kCompressed ? "compressed" : "full";
}

ScheduleKind parse_schedule(const std::string& name) {
    if (name == "fixed") return ScheduleKind::kFixedOptimal;
    if (name == "mateus") return ScheduleKind::kMateusRandom;
    if (name == "bbht") return ScheduleKind::kBbht;
    throw std::invalid_argument("unknown schedule \"" + name +
                                "\" (expected fixed, mateus, or bbht)");
}

SimMode parse_mode(const std::string& name) {
    if (name == "compressed") return SimMode::kCompressed;
    if (name == "full") return SimMode::kFull;
    throw std::invalid_argument("unknown mode \"" + name +
                                "\" (expected compressed or full)");
}

SearchContext make_search_context(const SymbolString& text, const SymbolString& pattern) {
    if (pattern.empty()) throw std::invalid_argument("pattern must not be empty");
    if (pattern.size() > text.size())
        throw std::invalid_argument("pattern is longer than the text");
    if (text.alphabet_size != pattern.alphabet_size)
        throw std::invalid_argument("text and pattern use different alphabets");

    SearchContext ctx;
    ctx.N = text.size();
    ctx.M = pattern.size();
    ctx.n = ctx.N - ctx.M + 1;
    ctx.query = parikh(pattern);

    const auto M = static_cast<std::uint32_t>(ctx.M);
    const PrimeCodec codec = PrimeCodec::first_primes_codec(text.alphabet_size);
    const WindowTable table = window_table(text, M, codec);
    ctx.marked = marked_set(table, ctx.query);
    const std::vector<Position> via_fp = marked_set(table, fingerprint(ctx.query, codec));
    if (ctx.marked != via_fp)
        throw std::logic_error("translation routes disagree on the marked set");
    return ctx;
}

BbhtSchedule bbht_schedule(std::size_t n, std::uint64_t seed, const BbhtParams& params) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    BbhtSchedule schedule;
    schedule.cutoff = params.cutoff_factor * sqrt_n;

    Rng rng = make_rng(seed);
    double m = 1.0;
    for (std::uint32_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        const auto range = static_cast<std::uint64_t>(std::floor(m));
        const std::uint64_t r = range <= 1 ? 0 : uniform_u64(rng, 0, range - 1);
        schedule.draws.push_back(r);
        schedule.total_oracle_calls += r;
        if (static_cast<double>(schedule.total_oracle_calls) >= schedule.cutoff) break;
        m = std::min(m * params.growth, sqrt_n);
    }
    return schedule;
}

SearchOutcome run_jpm_search(const SearchContext& ctx, ScheduleKind schedule, SimMode mode,
                             std::uint64_t seed, const BbhtParams& params) {
    if (mode == SimMode::kFull) {
        // init_window_superposition_full re-checks, but fail early with the
        // sharper message.
        if ((ctx.N & (ctx.N - 1)) != 0)
            throw std::invalid_argument("full mode requires the text length to be a power of two");
    }
    const std::size_t t = ctx.marked.size();

    Rng rng = make_rng(seed);
    SearchOutcome outcome;
    outcome.seed = seed;
    outcome.mode = mode;

    switch (schedule) {
        case ScheduleKind::kFixedOptimal: {
            if (t == 0)
                throw std::invalid_argument(
                    "fixed schedule needs a known match count >= 1; "
                    "use a randomized schedule for possibly-empty queries");
            const std::uint64_t r = optimal_iterations(ctx.n, t);
            outcome.measured_position = run_attempt(ctx, mode, r, rng);
            outcome.oracle_calls = r;
            break;
        }
        case ScheduleKind::kMateusRandom: {
            const std::uint64_t r = uniform_u64(rng, 1, mateus_range(ctx.n));
            outcome.measured_position = run_attempt(ctx, mode, r, rng);
            outcome.oracle_calls = r;
            break;
        }
        case ScheduleKind::kBbht: {
            const double sqrt_n = std::sqrt(static_cast<double>(ctx.n));
            const double cutoff = params.cutoff_factor * sqrt_n;
            double m = 1.0;
            for (std::uint32_t attempt = 0; attempt < params.max_attempts; ++attempt) {
                const auto range = static_cast<std::uint64_t>(std::floor(m));
                const std::uint64_t r = range <= 1 ? 0 : uniform_u64(rng, 0, range - 1);
                outcome.measured_position = run_attempt(ctx, mode, r, rng);
                outcome.oracle_calls += r;
                if (verify_position(ctx, outcome.measured_position)) break;
                if (static_cast<double>(outcome.oracle_calls) >= cutoff) break;
                m = std::min(m * params.growth, sqrt_n);
            }
            break;
        }
    }

    outcome.iterations_used = outcome.oracle_calls;
    outcome.is_match = verify_position(ctx, outcome.measured_position);
    return outcome;
}

SearchOutcome run_jpm_search(const SymbolString& text, const SymbolString& pattern,
                             ScheduleKind schedule, SimMode mode, std::uint64_t seed,
                             const BbhtParams& params) {
    return run_jpm_search(make_search_context(text, pattern), schedule, mode, seed, params);
}

SearchOutcome run_closest_match(const SymbolString& w, const SymbolString& p,
                                std::uint64_t seed, std::optional<std::uint64_t> forced_r) {
    if (p.empty()) throw std::invalid_argument("pattern must not be empty");
    if (p.size() > w.size()) throw std::invalid_argument("pattern is longer than the text");
    if (w.alphabet_size != p.alphabet_size)
        throw std::invalid_argument("text and pattern use different alphabets");

    const std::size_t N = w.size();
    const std::size_t M = p.size();
    const std::size_t n = N - M + 1;

    Rng rng = make_rng(seed);
    const std::uint64_t r = forced_r ? *forced_r : uniform_u64(rng, 1, mateus_range(n));

    FullState state = init_window_superposition_full(N, M);
    // The baseline amplifies by reflecting about its own start state: that
    // reflection never moves amplitude off the window superposition's
    // support, so r = 0 (and a pattern sharing no symbol with the text)
    // leaves the outcome uniform over the n windows, and the modal outcome
    // of the amplified walk is the best-matching window rather than an
    // artifact of off-window leakage.
    const FullState reference = state;
    for (std::uint64_t i = 0; i < r; ++i) {
        const auto j = static_cast<std::uint32_t>(uniform_u64(rng, 1, M));
        phase_oracle_symbol(state, j, p.symbols[j - 1], w);
        reflect_about(state, reference);
    }

    SearchOutcome outcome;
    outcome.measured_position = sample_position(first_register_marginal(state), rng);
    outcome.oracle_calls = r;
    outcome.iterations_used = r;
    outcome.seed = seed;
    outcome.mode = SimMode::kFull;
    // The baseline is probabilistic by definition and reports the raw
    // measurement; no classical verification happens here.
    outcome.is_match = false;
    return outcome;
}

std::vector<SearchOutcome> run_trial_batch(const SearchContext& ctx, ScheduleKind schedule,
                                           SimMode mode, std::uint64_t root_seed,
                                           std::size_t trials, const BbhtParams& params) {
    if (trials == 0) throw std::invalid_argument("need trials >= 1");
    std::vector<SearchOutcome> outcomes;
    outcomes.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i)
        outcomes.push_back(run_jpm_search(ctx, schedule, mode, trial_seed(root_seed, i), params));
    return outcomes;
}

BatchSummary summarize(const std::vector<SearchOutcome>& outcomes, const SearchContext& ctx,
                       ScheduleKind schedule, SimMode mode) {
    BatchSummary summary;
    summary.trials = outcomes.size();
    if (outcomes.empty()) return summary;

    std::size_t hits = 0;
    double calls = 0.0;
    for (const SearchOutcome& o : outcomes) {
        hits += o.is_match;
        calls += static_cast<double>(o.oracle_calls);
    }
    summary.empirical_success_rate = static_cast<double>(hits) / static_cast<double>(outcomes.size());
    summary.mean_oracle_calls = calls / static_cast<double>(outcomes.size());

    if (mode == SimMode::kCompressed) {
        const std::size_t t = ctx.marked.size();
        if (schedule == ScheduleKind::kFixedOptimal && t >= 1) {
            summary.closed_form_reference =
                success_probability_closed_form(ctx.n, t, optimal_iterations(ctx.n, t));
        } else if (schedule == ScheduleKind::kMateusRandom) {
            if (t == 0) {
                summary.closed_form_reference = 0.0;
            } else {
                const std::uint64_t top = mateus_range(ctx.n);
                double mean = 0.0;
                for (std::uint64_t r = 1; r <= top; ++r)
                    mean += success_probability_closed_form(ctx.n, t, r);
                summary.closed_form_reference = mean / static_cast<double>(top);
            }
        }
    }
    return summary;
}

}  // namespace qjpm
