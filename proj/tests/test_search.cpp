#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qjpm/grover.hpp"
#include "qjpm/instances.hpp"
#include "qjpm/search.hpp"

using namespace qjpm;

namespace {

SymbolString sym(std::string_view raw, const Alphabet& a) { return map_to_symbols(raw, a); }

bool contains(const std::vector<Position>& v, Position p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("schedule and mode names round-trip") {
    CHECK(parse_schedule("fixed") == ScheduleKind::kFixedOptimal);
    CHECK(parse_schedule("mateus") == ScheduleKind::kMateusRandom);
    CHECK(parse_schedule("bbht") == ScheduleKind::kBbht);
    CHECK(schedule_name(ScheduleKind::kBbht) == std::string("bbht"));
    CHECK(parse_mode("full") == SimMode::kFull);
    CHECK(mode_name(SimMode::kCompressed) == std::string("compressed"));
    CHECK_THROWS_AS(parse_schedule("grover"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mode("dense"), std::invalid_argument);
}

TEST_CASE("search context carries the classical ground truth") {
    const Alphabet abc("abc");
    const SearchContext ctx = make_search_context(sym("aabbc", abc), sym("ab", abc));
    CHECK(ctx.N == 5);
    CHECK(ctx.M == 2);
    CHECK(ctx.n == 4);
    CHECK(ctx.marked == std::vector<Position>{2});
    CHECK(ctx.query.counts == std::vector<std::uint32_t>{1, 1, 0});

    CHECK_THROWS_AS(make_search_context(sym("ab", abc), sym("abc", abc)),
                    std::invalid_argument);  // pattern longer than text
}

TEST_CASE("fixed schedule on the pinned instance is always right") {
    const Alphabet abc("abc");
    const SymbolString text = sym("aabbc", abc);
    const SymbolString pattern = sym("ab", abc);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SearchOutcome out =
            run_jpm_search(text, pattern, ScheduleKind::kFixedOptimal, SimMode::kCompressed, seed);
        CHECK(out.measured_position == 2);
        CHECK(out.is_match);
        CHECK(out.oracle_calls == 1);  // r* = 1 for n=4, t=1
        CHECK(out.iterations_used == 1);
        CHECK(out.seed == seed);
    }
    // Same seed, same outcome: trials are replayable.
    const SearchOutcome a =
        run_jpm_search(text, pattern, ScheduleKind::kMateusRandom, SimMode::kCompressed, 123);
    const SearchOutcome b =
        run_jpm_search(text, pattern, ScheduleKind::kMateusRandom, SimMode::kCompressed, 123);
    CHECK(a.measured_position == b.measured_position);
    CHECK(a.oracle_calls == b.oracle_calls);
}

TEST_CASE("degenerate instances") {
    const Alphabet ab("ab");

    // Everything marked: zero iterations, guaranteed match.
    const SearchOutcome all = run_jpm_search(sym("abab", ab), sym("ba", ab),
                                             ScheduleKind::kFixedOptimal,
                                             SimMode::kCompressed, 9);
    CHECK(all.is_match);
    CHECK(all.oracle_calls == 0);

    // Nothing marked: the fixed schedule refuses (it needs the true count).
    CHECK_THROWS_WITH_AS(run_jpm_search(sym("aaaa", ab), sym("bb", ab),
                                        ScheduleKind::kFixedOptimal, SimMode::kCompressed, 9),
                         doctest::Contains("fixed schedule needs a known match count"),
                         std::invalid_argument);

    // The randomized schedule runs and correctly reports no match.
    const SearchOutcome none = run_jpm_search(sym("aaaa", ab), sym("bb", ab),
                                              ScheduleKind::kMateusRandom,
                                              SimMode::kCompressed, 9);
    CHECK_FALSE(none.is_match);
    CHECK(none.oracle_calls <= 1);  // floor(sqrt(3)) = 1
}

TEST_CASE("mateus schedule draws r uniformly from [1, floor(sqrt(n))]") {
    Rng gen = make_rng(2024);
    const PlantedInstance inst = gen_planted_instance(gen, 67, 4, 4, 1);
    const SearchContext ctx = make_search_context(inst.text, inst.pattern);
    REQUIRE(ctx.n == 64);
    bool seen_low = false, seen_high = false;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const SearchOutcome out =
            run_jpm_search(ctx, ScheduleKind::kMateusRandom, SimMode::kCompressed, seed);
        CHECK(out.oracle_calls >= 1);
        CHECK(out.oracle_calls <= 8);
        seen_low = seen_low || out.oracle_calls == 1;
        seen_high = seen_high || out.oracle_calls == 8;
        CHECK(out.is_match == contains(ctx.marked, out.measured_position));
    }
    CHECK(seen_low);
    CHECK(seen_high);
}

TEST_CASE("worst-case schedule: frozen fixture and structural bounds") {
    const BbhtSchedule gold = bbht_schedule(64, 42);
    CHECK(gold.cutoff == 72.0);  // 9 * sqrt(64)
    CHECK(gold.total_oracle_calls == 72);
    CHECK(gold.draws == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 4,
                                                   0, 6, 1, 3, 6, 0, 6, 5, 0, 6, 2,
                                                   1, 7, 3, 2, 1, 1, 5, 4, 1, 4});

    // Range grows toward sqrt(n), so no draw ever reaches it.
    for (std::uint64_t r : gold.draws) CHECK(r < 8);

    // n=1 keeps drawing r=0 until the attempt limit.
    const BbhtSchedule one = bbht_schedule(1, 7);
    CHECK(one.draws.size() == 1000);
    CHECK(one.draws.front() == 0);
    CHECK(one.total_oracle_calls == 0);
}

TEST_CASE("worst-case schedule runner: verified success, bounded cost") {
    Rng gen = make_rng(77);
    const PlantedInstance inst = gen_planted_instance(gen, 67, 4, 4, 1);
    const SearchContext ctx = make_search_context(inst.text, inst.pattern);
    REQUIRE(ctx.n == 64);
    const double root = std::sqrt(64.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SearchOutcome out =
            run_jpm_search(ctx, ScheduleKind::kBbht, SimMode::kCompressed, seed);
        CHECK(out.is_match);  // t = 1 is found well before the cutoff
        CHECK(out.measured_position == ctx.marked[0]);
        CHECK(out.oracle_calls < 10 * root);  // cutoff plus at most one draw
    }

    // t = 0: not-found is reported only after the cutoff is spent.
    const Alphabet ab("ab");
    SymbolString text;
    text.alphabet_size = 2;
    text.symbols.assign(64 + 1, 0);  // "aaa...a", n = 64
    const SearchOutcome none =
        run_jpm_search(text, sym("bb", ab), ScheduleKind::kBbht, SimMode::kCompressed, 5);
    CHECK_FALSE(none.is_match);
    CHECK(none.oracle_calls >= 72);
    CHECK(none.oracle_calls < 80);
}

TEST_CASE("full mode: r = 0 matches compressed exactly; leakage stays honest") {
    const Alphabet ab("ab");
    const SymbolString text = sym("aabbabab", ab);  // N = 8 = 2^3
    const SymbolString pattern = sym("ab", ab);
    const SearchContext ctx = make_search_context(text, pattern);
    REQUIRE(ctx.n == 7);
    REQUIRE(ctx.marked.size() == 5);  // r* = 0: measurement of the uniform state

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SearchOutcome flat =
            run_jpm_search(ctx, ScheduleKind::kFixedOptimal, SimMode::kCompressed, seed);
        const SearchOutcome full =
            run_jpm_search(ctx, ScheduleKind::kFixedOptimal, SimMode::kFull, seed);
        CHECK(flat.oracle_calls == 0);
        CHECK(full.measured_position == flat.measured_position);
        CHECK(full.mode == SimMode::kFull);
    }

    // With iterations the product-form diffusion leaks, but verification
    // still grounds every verdict in the classical match set.
    Rng gen = make_rng(88);
    const PlantedInstance inst = gen_planted_instance(gen, 16, 2, 2, 1);
    const SearchContext leaky = make_search_context(inst.text, inst.pattern);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const SearchOutcome out =
            run_jpm_search(leaky, ScheduleKind::kMateusRandom, SimMode::kFull, seed);
        CHECK(out.is_match == contains(leaky.marked, out.measured_position));
    }
}

TEST_CASE("closest-pattern baseline: deterministic, never classically verified") {
    const Alphabet abc("abc");
    const SymbolString w = sym("aaab", abc);
    const SymbolString p = sym("ab", abc);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SearchOutcome out = run_closest_match(w, p, seed);
        CHECK_FALSE(out.is_match);
        CHECK(out.measured_position >= 1);
        CHECK(out.measured_position <= 4);  // register range, leakage included
        CHECK(out.iterations_used == 1);    // floor(sqrt(3)) = 1
        const SearchOutcome again = run_closest_match(w, p, seed);
        CHECK(again.measured_position == out.measured_position);
    }

    // Disabled amplification: zero iterations, still a sane sample.
    const SearchOutcome flat = run_closest_match(w, p, 3, std::uint64_t{0});
    CHECK(flat.iterations_used == 0);
    CHECK(flat.oracle_calls == 0);

    // A pattern sharing no symbol with w leaves the state uniform; the
    // baseline still reports a window rather than failing.
    const SearchOutcome blind = run_closest_match(w, sym("cc", abc), 11);
    CHECK(blind.measured_position >= 1);
    CHECK(blind.measured_position <= 4);
}

TEST_CASE("trial batches: derived seeds, stable order, faithful summary") {
    const Alphabet abc("abc");
    const SearchContext ctx = make_search_context(sym("aabbc", abc), sym("ab", abc));
    const std::uint64_t root = 99;
    const auto outcomes =
        run_trial_batch(ctx, ScheduleKind::kFixedOptimal, SimMode::kCompressed, root, 64);
    REQUIRE(outcomes.size() == 64);
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        CHECK(outcomes[i].seed == (root ^ i));

    const BatchSummary fixed =
        summarize(outcomes, ctx, ScheduleKind::kFixedOptimal, SimMode::kCompressed);
    CHECK(fixed.trials == 64);
    CHECK(fixed.empirical_success_rate == 1.0);
    CHECK(fixed.mean_oracle_calls == 1.0);
    REQUIRE(fixed.closed_form_reference.has_value());
    CHECK(*fixed.closed_form_reference == doctest::Approx(1.0).epsilon(1e-12));

    // Statistical contract: empirical within 3 sigma + 0.01 of the
    // analytic reference for the randomized schedule too.
    const auto mateus =
        run_trial_batch(ctx, ScheduleKind::kMateusRandom, SimMode::kCompressed, root, 400);
    const BatchSummary ms = summarize(mateus, ctx, ScheduleKind::kMateusRandom,
                                      SimMode::kCompressed);
    REQUIRE(ms.closed_form_reference.has_value());
    const double p = *ms.closed_form_reference;
    const double bound = 3 * std::sqrt(p * (1 - p) / 400) + 0.01;
    CHECK(std::abs(ms.empirical_success_rate - p) <= bound);

    // Worst-case schedule and full mode carry no closed-form reference.
    const auto bbht =
        run_trial_batch(ctx, ScheduleKind::kBbht, SimMode::kCompressed, root, 16);
    CHECK_FALSE(summarize(bbht, ctx, ScheduleKind::kBbht, SimMode::kCompressed)
                    .closed_form_reference.has_value());
}
