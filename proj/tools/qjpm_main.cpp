// qjpm: desk-scale simulator and verification harness for quantum jumbled
// pattern matching. Subcommands: classic, search, sweep, gates, verify.
// Exit statuses: 0 ok, 2 invalid input, 3 verification failure.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>

#include "qjpm/grover.hpp"
#include "qjpm/instances.hpp"
#include "qjpm/io.hpp"
#include "qjpm/jumbled_index.hpp"
#include "qjpm/prep_circuit.hpp"
#include "qjpm/search.hpp"
#include "qjpm/translation.hpp"
#include "qjpm/verify.hpp"
#include "qjpm/version.hpp"

namespace {

using namespace qjpm;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --text/--pattern/--alphabet values name a file when one exists at that
// path; otherwise they are the literal bytes. Timing and progress go to
// stderr so written artifacts stay byte-identical for a given config.
std::string load_arg(const std::string& value) {
    std::error_code ec;
    if (!value.empty() && std::filesystem::is_regular_file(value, ec))
        return read_text_file(value);
    return value;
}

Alphabet resolve_alphabet(const std::string& alphabet_arg, const std::string& text,
                          const std::string& pattern) {
    if (!alphabet_arg.empty()) return Alphabet(load_arg(alphabet_arg));
    return Alphabet::from_text(text + pattern);
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    std::random_device rd;
    const std::uint64_t drawn = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << drawn << " (drawn at random; pass --seed to replay)\n";
    return drawn;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

struct CommonArgs {
    std::string text;
    std::string pattern;
    std::string alphabet;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool seed_given = false;
};

struct LoadedInstance {
    SymbolString text;
    SymbolString pattern;
    Alphabet alphabet;
    std::string text_bytes;
    std::string pattern_bytes;
};

LoadedInstance load_instance(const CommonArgs& args) {
    std::string text_bytes = load_arg(args.text);
    std::string pattern_bytes = load_arg(args.pattern);
    Alphabet alphabet = resolve_alphabet(args.alphabet, text_bytes, pattern_bytes);
    SymbolString text = map_to_symbols(text_bytes, alphabet);
    SymbolString pattern = map_to_symbols(pattern_bytes, alphabet);
    return {std::move(text), std::move(pattern), std::move(alphabet), std::move(text_bytes),
            std::move(pattern_bytes)};
}

std::uint64_t hash_config(const std::string& canonical) { return fnv1a64(canonical); }

// ---- classic ---------------------------------------------------------------

int cmd_classic(const CommonArgs& args, bool full_index, const std::string& dump_index_path) {
    const LoadedInstance inst = load_instance(args);
    const auto M = static_cast<std::uint32_t>(inst.pattern.size());

    auto start = std::chrono::steady_clock::now();
    const std::vector<Position> sliding = sliding_window_matches(inst.text, inst.pattern);
    const double sliding_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const JumbledIndex index = build_jumbled_index(inst.text, M);
    const std::vector<Position> indexed = index_query(index, parikh(inst.pattern));
    const double index_s = seconds_since(start);

    std::cerr << "timing: sliding_window " << sliding_s << "s, index build+query " << index_s
              << "s\n";
    if (sliding != indexed) {
        std::cerr << "{\"error\":\"baselines disagree; this is a defect\"}\n";
        return 1;
    }

    if (full_index) {
        // The all-sizes build: one dictionary per window size, the quadratic
        // trade-off a per-size build avoids.
        start = std::chrono::steady_clock::now();
        std::size_t total_keys = 0;
        for (std::uint32_t m = 2; m <= inst.text.size(); ++m)
            total_keys += build_jumbled_index(inst.text, m).table.size();
        std::cerr << "timing: full index (sizes 2.." << inst.text.size() << ") "
                  << seconds_since(start) << "s, " << total_keys << " keys total\n";
    }

    if (!dump_index_path.empty())
        write_file(dump_index_path, index_to_json(index).dump(2) + "\n");

    if (args.format == "json") {
        Json out;
        out["schema_version"] = 1;
        out["positions"] = sliding;
        out["count"] = sliding.size();
        out["baselines_agree"] = true;
        out["window_size"] = M;
        out["text_length"] = inst.text.size();
        emit(args.out, out.dump(2) + "\n");
    } else {
        std::string csv = "position\n";
        for (Position k : sliding) csv += std::to_string(k) + "\n";
        emit(args.out, csv);
    }
    return 0;
}

// ---- search ----------------------------------------------------------------

int cmd_search(const CommonArgs& args, const std::string& schedule_arg,
               const std::string& mode_arg, std::size_t trials, const BbhtParams& bbht,
               const std::string& dump_state_path, const std::string& dump_table_path,
               const std::string& dump_codec_path) {
    const LoadedInstance inst = load_instance(args);
    const ScheduleKind schedule = parse_schedule(schedule_arg);
    const SimMode mode = parse_mode(mode_arg);
    const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

    const SearchContext ctx = make_search_context(inst.text, inst.pattern);

    if (!dump_state_path.empty()) {
        if (mode == SimMode::kCompressed)
            write_file(dump_state_path,
                       state_to_json(init_window_superposition_compressed(ctx.n)).dump() + "\n");
        else
            write_file(dump_state_path,
                       state_to_json(init_window_superposition_full(ctx.N, ctx.M)).dump() + "\n");
    }
    const PrimeCodec codec = PrimeCodec::first_primes_codec(inst.alphabet.size());
    if (!dump_table_path.empty())
        write_file(dump_table_path,
                   window_table_csv(window_table(inst.text, static_cast<std::uint32_t>(ctx.M),
                                                 codec),
                                    inst.alphabet));
    if (!dump_codec_path.empty())
        write_file(dump_codec_path, codec_to_json(codec, inst.alphabet).dump(2) + "\n");

    const std::string canonical =
        "search|text=" + inst.text_bytes + "|pattern=" + inst.pattern_bytes +
        "|alphabet=" + inst.alphabet.labels() + "|schedule=" + schedule_arg +
        "|mode=" + mode_arg + "|trials=" + std::to_string(trials) +
        "|bbht=" + std::to_string(bbht.growth) + "," + std::to_string(bbht.cutoff_factor) + "," +
        std::to_string(bbht.max_attempts);

    const auto start = std::chrono::steady_clock::now();
    const std::vector<SearchOutcome> outcomes =
        run_trial_batch(ctx, schedule, mode, seed, trials, bbht);
    std::cerr << "timing: " << trials << " trials in " << seconds_since(start) << "s\n";

    if (!args.out.empty()) {
        if (args.format == "json")
            write_file(args.out, trials_json(outcomes, ctx, schedule, mode).dump(2) + "\n");
        else
            write_file(args.out, trials_csv(outcomes, ctx, schedule, mode));
    }

    const BatchSummary summary = summarize(outcomes, ctx, schedule, mode);
    std::cout << summary_json(summary, ctx, schedule, mode, seed, hash_config(canonical)).dump(2)
              << "\n";
    return 0;
}

// ---- sweep -----------------------------------------------------------------

int cmd_sweep(const std::vector<std::size_t>& n_list, std::size_t M,
              std::uint32_t alphabet_size, std::size_t matches, double density,
              std::size_t trials, bool seed_given, std::uint64_t seed_arg,
              const std::string& schedule_arg, const std::string& out_path) {
    if (n_list.size() < 3)
        throw std::invalid_argument("sweep needs at least 3 text lengths for a fit");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("text lengths must be strictly increasing");
    if (density != 0.0 && (density <= 0.0 || density > 1.0))
        throw std::invalid_argument("density must be in (0, 1]");

    const ScheduleKind schedule = parse_schedule(schedule_arg);
    const std::uint64_t seed = resolve_seed(seed_given, seed_arg);

    std::string csv =
        "N,n,t,median_oracle_calls,mean_oracle_calls,empirical_success_rate\n";
    Json points = Json::array();
    std::vector<double> log_n, log_median;

    Rng gen_rng = make_rng(seed);
    for (std::size_t idx = 0; idx < n_list.size(); ++idx) {
        const std::size_t N = n_list[idx];
        if (N < M + 2)
            throw std::invalid_argument("text length " + std::to_string(N) +
                                        " is too small for window size " + std::to_string(M));
        const std::size_t window_count = N - M + 1;
        const std::size_t t =
            density > 0.0
                ? std::max<std::size_t>(1, static_cast<std::size_t>(
                                               std::llround(density * window_count)))
                : matches;

        const PlantedInstance inst =
            gen_planted_instance(gen_rng, N, M, alphabet_size, t);
        const SearchContext ctx = make_search_context(inst.text, inst.pattern);

        const std::uint64_t point_root = seed ^ (static_cast<std::uint64_t>(idx + 1) << 32);
        const auto start = std::chrono::steady_clock::now();
        const std::vector<SearchOutcome> outcomes =
            run_trial_batch(ctx, schedule, SimMode::kCompressed, point_root, trials);
        std::cerr << "timing: N=" << N << " " << trials << " trials in "
                  << seconds_since(start) << "s\n";

        std::vector<std::uint64_t> calls;
        calls.reserve(outcomes.size());
        for (const SearchOutcome& o : outcomes) calls.push_back(o.oracle_calls);
        std::sort(calls.begin(), calls.end());
        const double median =
            calls.size() % 2 == 1
                ? static_cast<double>(calls[calls.size() / 2])
                : 0.5 * (static_cast<double>(calls[calls.size() / 2 - 1]) +
                         static_cast<double>(calls[calls.size() / 2]));
        const BatchSummary summary = summarize(outcomes, ctx, schedule, SimMode::kCompressed);

        char row[160];
        std::snprintf(row, sizeof row, "%zu,%zu,%zu,%.1f,%.6f,%.6f\n", N, ctx.n, t, median,
                      summary.mean_oracle_calls, summary.empirical_success_rate);
        csv += row;

        Json point;
        point["N"] = N;
        point["n"] = ctx.n;
        point["t"] = t;
        point["median_oracle_calls"] = median;
        point["mean_oracle_calls"] = summary.mean_oracle_calls;
        point["empirical_success_rate"] = summary.empirical_success_rate;
        points.push_back(std::move(point));

        if (median <= 0.0)
            throw std::invalid_argument(
                "median oracle calls is zero at N=" + std::to_string(N) +
                "; the log-log fit needs a schedule that iterates");
        log_n.push_back(std::log(static_cast<double>(N)));
        log_median.push_back(std::log(median));
    }

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        mean_x += log_n[i];
        mean_y += log_median[i];
    }
    mean_x /= static_cast<double>(log_n.size());
    mean_y /= static_cast<double>(log_n.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        sxx += (log_n[i] - mean_x) * (log_n[i] - mean_x);
        sxy += (log_n[i] - mean_x) * (log_median[i] - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        const double r = log_median[i] - (intercept + slope * log_n[i]);
        ss_res += r * r;
    }
    const double residual_rms = std::sqrt(ss_res / static_cast<double>(log_n.size()));

    if (!out_path.empty()) write_file(out_path, csv);

    std::string n_spec;
    for (std::size_t N : n_list) n_spec += std::to_string(N) + ",";
    const std::string canonical = "sweep|N=" + n_spec + "|M=" + std::to_string(M) +
                                  "|sigma=" + std::to_string(alphabet_size) +
                                  "|matches=" + std::to_string(matches) +
                                  "|density=" + std::to_string(density) +
                                  "|trials=" + std::to_string(trials) +
                                  "|schedule=" + schedule_arg;

    Json out;
    out["schema_version"] = 1;
    out["schedule"] = schedule_name(schedule);
    out["mode"] = "compressed";
    out["slope"] = slope;
    out["intercept"] = intercept;
    out["residual_rms"] = residual_rms;
    out["points"] = std::move(points);
    out["metadata"] = run_metadata(seed, hash_config(canonical));
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- gates -----------------------------------------------------------------

int cmd_gates(const std::vector<std::uint32_t>& s_list, const std::vector<std::uint32_t>& m_list,
              const std::string& out_path, const std::string& dump_circuit_path) {
    const GateGrowthReport report = gate_growth_report(s_list, m_list);
    if (!dump_circuit_path.empty())
        write_file(dump_circuit_path,
                   circuit_to_json(build_cyclic_window_prep_gates(s_list.back(), m_list.back()))
                           .dump(2) +
                       "\n");
    emit(out_path, report.csv);
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& format) {
    const std::vector<CheckResult> results = run_verification_suite();
    bool all_pass = true;
    if (format == "json") {
        Json out = Json::array();
        for (const CheckResult& r : results) {
            out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "verification suite: all checks passed\n"
                               : "verification suite: FAILURES above\n");
    }
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale quantum jumbled pattern matching simulator"};
    app.set_version_flag("--version", qjpm::kVersion);
    app.require_subcommand(1);

    CommonArgs args;
    BbhtParams bbht;

    // classic
    auto* classic = app.add_subcommand("classic", "classical baselines: sliding window + index");
    bool full_index = false;
    std::string dump_index_path;
    classic->add_option("--text", args.text, "text (literal bytes, or a path to a file)")
        ->required();
    classic->add_option("--pattern", args.pattern, "pattern (literal or path)")->required();
    classic->add_option("--alphabet", args.alphabet,
                        "ordered alphabet bytes (literal or path); default: distinct bytes of "
                        "text+pattern, ascending");
    classic->add_option("--format", args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    classic->add_option("--out", args.out, "write the match report here instead of stdout");
    classic->add_flag("--full-index", full_index,
                      "also build dictionaries for every window size 2..N (trade-off demo)");
    classic->add_option("--dump-index", dump_index_path, "write the index as JSON to this path");

    // search
    auto* search = app.add_subcommand("search", "seeded quantum search trials");
    std::string schedule_arg = "fixed";
    std::string mode_arg = "compressed";
    std::size_t trials = 100;
    std::string dump_state_path, dump_table_path, dump_codec_path;
    search->add_option("--text", args.text, "text (literal or path)")->required();
    search->add_option("--pattern", args.pattern, "pattern (literal or path)")->required();
    search->add_option("--alphabet", args.alphabet, "ordered alphabet bytes (literal or path)");
    search->add_option("--mode", mode_arg, "compressed|full")
        ->check(CLI::IsMember({"compressed", "full"}));
    search->add_option("--schedule", schedule_arg, "fixed|mateus|bbht")
        ->check(CLI::IsMember({"fixed", "mateus", "bbht"}));
    search->add_option("--trials", trials, "independent seeded trials")->check(CLI::PositiveNumber);
    auto* seed_opt = search->add_option("--seed", args.seed, "root seed (64-bit)");
    search->add_option("--format", args.format, "csv|json for the per-trial dump")
        ->check(CLI::IsMember({"csv", "json"}));
    search->add_option("--out", args.out, "write per-trial outcomes here (summary stays on stdout)");
    search->add_option("--bbht-growth", bbht.growth, "range growth per failed attempt");
    search->add_option("--bbht-cutoff", bbht.cutoff_factor,
                       "stop after cutoff*sqrt(n) total oracle calls");
    search->add_option("--bbht-max-attempts", bbht.max_attempts, "hard attempt limit");
    search->add_option("--dump-state", dump_state_path,
                       "write the prepared initial state (JSON) to this path");
    search->add_option("--dump-table", dump_table_path,
                       "write the window translation table (CSV) to this path");
    search->add_option("--dump-codec", dump_codec_path,
                       "write the symbol-to-prime codec (JSON) to this path");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "scaling fit over planted instances");
    std::vector<std::size_t> n_list{64, 128, 256, 512, 1024, 2048, 4096};
    std::size_t sweep_m = 16;
    std::uint32_t sweep_sigma = 16;
    std::size_t sweep_matches = 1;
    double sweep_density = 0.0;
    std::size_t sweep_trials = 101;
    std::uint64_t sweep_seed = 0;
    std::string sweep_schedule = "fixed";
    std::string sweep_out;
    sweep->add_option("--n-list", n_list, "text lengths, strictly increasing")->delimiter(',');
    sweep->add_option("--m", sweep_m, "pattern length");
    sweep->add_option("--alphabet-size", sweep_sigma, "number of symbols");
    sweep->add_option("--matches", sweep_matches, "planted match count per instance");
    sweep->add_option("--density", sweep_density,
                      "plant matches at this fraction of windows instead of --matches");
    sweep->add_option("--trials", sweep_trials, "trials per point")->check(CLI::PositiveNumber);
    auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "root seed (64-bit)");
    sweep->add_option("--schedule", sweep_schedule, "fixed|mateus|bbht")
        ->check(CLI::IsMember({"fixed", "mateus", "bbht"}));
    sweep->add_option("--out", sweep_out, "write the per-point CSV to this path");

    // gates
    auto* gates = app.add_subcommand("gates", "preparation-circuit resource report");
    std::vector<std::uint32_t> s_list{1, 2, 3, 4};
    std::vector<std::uint32_t> m_list{1, 2, 3};
    std::string gates_out, dump_circuit_path;
    gates->add_option("--s-list", s_list, "qubits per register")->delimiter(',');
    gates->add_option("--m-list", m_list, "register counts")->delimiter(',');
    gates->add_option("--out", gates_out, "write the CSV here instead of stdout");
    gates->add_option("--dump-circuit", dump_circuit_path,
                      "write the largest grid circuit (JSON) to this path");

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-module verification suite");
    std::string verify_format = "text";
    verify->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\"error\":" << qjpm::Json(std::string(e.what())).dump() << "}\n";
        return 2;
    }

    args.seed_given = seed_opt->count() > 0;

    try {
        if (classic->parsed()) return cmd_classic(args, full_index, dump_index_path);
        if (search->parsed())
            return cmd_search(args, schedule_arg, mode_arg, trials, bbht, dump_state_path,
                              dump_table_path, dump_codec_path);
        if (sweep->parsed())
            return cmd_sweep(n_list, sweep_m, sweep_sigma, sweep_matches, sweep_density,
                             sweep_trials, sweep_seed_opt->count() > 0, sweep_seed,
                             sweep_schedule, sweep_out);
        if (gates->parsed()) return cmd_gates(s_list, m_list, gates_out, dump_circuit_path);
        if (verify->parsed()) return cmd_verify(verify_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"error\":" << qjpm::Json(std::string(e.what())).dump() << "}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":" << qjpm::Json(std::string(e.what())).dump()
                  << ",\"kind\":\"internal\"}\n";
        return 1;
    }
    return 0;
}
