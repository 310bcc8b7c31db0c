#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qjpm/rng.hpp"
#include "qjpm/text.hpp"

namespace qjpm {

enum class ScheduleKind { kFixedOptimal, kMateusRandom, kBbht };
enum class SimMode { kCompressed, kFull };

const char* schedule_name(ScheduleKind kind);  // "fixed" | "mateus" | "bbht"
const char* mode_name(SimMode mode);           // "compressed" | "full"
ScheduleKind parse_schedule(const std::string& name);
SimMode parse_mode(const std::string& name);

struct BbhtParams {
    double growth = 6.0 / 5.0;      // range growth per failed attempt
    double cutoff_factor = 9.0;     // stop once total oracle calls reach cutoff_factor * sqrt(n)
    std::uint32_t max_attempts = 1000;  // hard stop (r = 0 draws consume no oracle calls)
};

struct SearchOutcome {
    Position measured_position = 0;  // 1-based; full mode can exceed n via leakage
    bool is_match = false;           // classically verified; always false for t = 0
    std::uint64_t oracle_calls = 0;
    std::uint64_t iterations_used = 0;  // = oracle_calls (one oracle per iteration)
    std::uint64_t seed = 0;
    SimMode mode = SimMode::kCompressed;
};

// Instance-level data shared by every trial: the window count n, the
// dual-route-checked marked set, and the query count vector used for the
// per-trial classical verification.
struct SearchContext {
    std::size_t N = 0;
    std::size_t M = 0;
    std::size_t n = 0;  // N - M + 1
    std::vector<Position> marked;
    ParikhVector query;
};

// Builds the context, computing the marked set through both translation
// routes (count-vector table and fingerprint table) and insisting they
// agree; a disagreement is a defect, not bad input.
SearchContext make_search_context(const SymbolString& text, const SymbolString& pattern);

// Worst-case iteration-count schedule: r drawn uniformly from [0, floor(m)-1]
// with m growing by `growth` up to sqrt(n), until total draws reach
// cutoff_factor * sqrt(n) or max_attempts. The runner consumes the same
// stream lazily and stops early on verified success.
struct BbhtSchedule {
    std::vector<std::uint64_t> draws;
    std::uint64_t total_oracle_calls = 0;
    double cutoff = 0.0;
};

BbhtSchedule bbht_schedule(std::size_t n, std::uint64_t seed, const BbhtParams& params = {});

// One seeded trial of the jumbled-matching search. Prepares the window
// superposition (compressed: n amplitudes; full: the injected linear-window
// tuple state), iterates marked-oracle + diffusion per the schedule, measures
// the first register once per attempt, and classically verifies the outcome
// with one count-vector comparison. fixed_optimal computes the true t
// classically (analysis tool, rejected when t = 0); the randomized schedules
// never see t.
SearchOutcome run_jpm_search(const SymbolString& text, const SymbolString& pattern,
                             ScheduleKind schedule, SimMode mode, std::uint64_t seed,
                             const BbhtParams& params = {});
SearchOutcome run_jpm_search(const SearchContext& ctx, ScheduleKind schedule, SimMode mode,
                             std::uint64_t seed, const BbhtParams& params = {});

// The closest-pattern baseline (full mode): r uniform in [1, floor(sqrt(n))],
// each iteration picks register j and symbol p_j at random, applies the
// per-symbol oracle and the first-register diffusion, then measures. Reports
// the measured position without classical verification (is_match stays
// false); forced_r = 0 disables amplification for the uniformity check.
SearchOutcome run_closest_match(const SymbolString& w, const SymbolString& p,
                                std::uint64_t seed,
                                std::optional<std::uint64_t> forced_r = std::nullopt);

// Independent trials with per-trial seed = root_seed ^ trial_index, outcomes
// ordered by trial index.
std::vector<SearchOutcome> run_trial_batch(const SearchContext& ctx, ScheduleKind schedule,
                                           SimMode mode, std::uint64_t root_seed,
                                           std::size_t trials, const BbhtParams& params = {});

struct BatchSummary {
    std::size_t trials = 0;
    double empirical_success_rate = 0.0;
    double mean_oracle_calls = 0.0;
    // Analytic reference for compressed mode: closed form at r* (fixed) or
    // averaged over the r range (mateus); absent for bbht and full mode.
    std::optional<double> closed_form_reference;
};

BatchSummary summarize(const std::vector<SearchOutcome>& outcomes, const SearchContext& ctx,
                       ScheduleKind schedule, SimMode mode);

}  // namespace qjpm
