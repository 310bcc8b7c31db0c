#include <doctest.h>

#include <cstdio>
#include <stdexcept>

#include "qjpm/io.hpp"
#include "qjpm/prep_circuit.hpp"
#include "qjpm/version.hpp"

using namespace qjpm;

namespace {

SymbolString sym(std::string_view raw, const Alphabet& a) { return map_to_symbols(raw, a); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/qjpm_io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("64-bit FNV-1a against published vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(hex64(0) == "0000000000000000");
    CHECK(hex64(0xdeadbeefULL) == "00000000deadbeef");
}

TEST_CASE("text files round-trip with one trailing newline stripped") {
    const TempFile f("roundtrip");
    write_file(f.path, "aabbc\n");
    CHECK(read_text_file(f.path) == "aabbc");
    write_file(f.path, "aabbc\r\n");
    CHECK(read_text_file(f.path) == "aabbc");
    write_file(f.path, "aabbc\n\n");
    CHECK(read_text_file(f.path) == "aabbc\n");  // only the last one
    write_file(f.path, "aabbc");
    CHECK(read_text_file(f.path) == "aabbc");

    CHECK_THROWS_AS(read_text_file("/nonexistent/qjpm"), std::invalid_argument);
}

TEST_CASE("index dump is ordered by count vector") {
    const Alphabet abc("abc");
    const Json dump = index_to_json(build_jumbled_index(sym("aabbc", abc), 2));
    CHECK(dump["window_size"] == 2);
    REQUIRE(dump["entries"].size() == 4);
    CHECK(dump["entries"][0]["counts"] == Json::array({0, 1, 1}));
    CHECK(dump["entries"][0]["positions"] == Json::array({4}));
    CHECK(dump["entries"][1]["counts"] == Json::array({0, 2, 0}));
    CHECK(dump["entries"][2]["counts"] == Json::array({1, 1, 0}));
    CHECK(dump["entries"][3]["counts"] == Json::array({2, 0, 0}));
    CHECK(dump["entries"][3]["positions"] == Json::array({1}));
}

TEST_CASE("state dumps carry their shape") {
    const Json flat = state_to_json(init_window_superposition_compressed(4));
    CHECK(flat["metadata"]["mode"] == "compressed");
    CHECK(flat["metadata"]["n"] == 4);
    REQUIRE(flat["amplitudes"].size() == 4);
    CHECK(flat["amplitudes"][0][0] == 0.5);
    CHECK(flat["amplitudes"][0][1] == 0.0);

    const Json full = state_to_json(init_window_superposition_full(4, 2));
    CHECK(full["metadata"]["mode"] == "full");
    CHECK(full["metadata"]["s"] == 2);
    CHECK(full["metadata"]["registers"] == 2);
    CHECK(full["amplitudes"].size() == 16);
}

TEST_CASE("circuit dump lists gates in order") {
    const Json dump = circuit_to_json(build_cyclic_window_prep(2, 2));
    CHECK(dump["width"] == 4);
    REQUIRE(dump["gates"].size() == 6);  // 2 H, 2-CNOT copy fan, CNOT+X increment
    CHECK(dump["gates"][0]["kind"] == "H");
    CHECK(dump["gates"][0]["controls"] == Json::array());
    REQUIRE(dump["gates"][0]["targets"].size() == 1);
}

TEST_CASE("codec dump maps labels to codes in alphabet order") {
    const Alphabet ab("ab");
    const Json dump = codec_to_json(PrimeCodec::first_primes_codec(2), ab);
    CHECK(dump["a"] == 2);
    CHECK(dump["b"] == 3);
    CHECK_THROWS_AS(codec_to_json(PrimeCodec::first_primes_codec(3), ab),
                    std::invalid_argument);
}

TEST_CASE("window table CSV") {
    const Alphabet abc("abc");
    const WindowTable tbl =
        window_table(sym("aabbc", abc), 2, PrimeCodec::first_primes_codec(3));
    CHECK(window_table_csv(tbl, abc) ==
          "k,count_a,count_b,count_c,fingerprint\n"
          "1,2,0,0,4\n"
          "2,1,1,0,6\n"
          "3,0,2,0,9\n"
          "4,0,1,1,15\n");
    CHECK_THROWS_AS(window_table_csv(window_parikh_table(sym("aabbc", abc), 2), abc),
                    std::invalid_argument);
}

TEST_CASE("resource report CSV with footnotes") {
    ResourceRow row;
    row.s = 2;
    row.M = 2;
    row.counts = gate_counts(build_cyclic_window_prep_gates(2, 2), true);
    CHECK(resource_report_csv({row}, {"one remark"}) ==
          "s,M,H,X,CNOT,MCX,decomposed_total\n"
          "2,2,2,1,3,0,6\n"
          "# one remark\n");
}

TEST_CASE("trial dumps: CSV and JSON agree with the outcomes") {
    const Alphabet abc("abc");
    const SearchContext ctx = make_search_context(sym("aabbc", abc), sym("ab", abc));
    const auto outcomes =
        run_trial_batch(ctx, ScheduleKind::kFixedOptimal, SimMode::kCompressed, 5, 2);

    CHECK(trials_csv(outcomes, ctx, ScheduleKind::kFixedOptimal, SimMode::kCompressed) ==
          "trial,seed,schedule,mode,n,t,iterations,oracle_calls,measured_position,is_match\n"
          "0,5,fixed,compressed,4,1,1,1,2,1\n"
          "1,4,fixed,compressed,4,1,1,1,2,1\n");  // seed 5 ^ 1 = 4

    const Json rows = trials_json(outcomes, ctx, ScheduleKind::kFixedOptimal,
                                  SimMode::kCompressed);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["trial"] == 0);
    CHECK(rows[1]["seed"] == 4);
    CHECK(rows[0]["measured_position"] == 2);
    CHECK(rows[0]["is_match"] == true);
}

TEST_CASE("summaries embed version, seed, generator, and config hash") {
    const Alphabet abc("abc");
    const SearchContext ctx = make_search_context(sym("aabbc", abc), sym("ab", abc));
    const auto outcomes =
        run_trial_batch(ctx, ScheduleKind::kBbht, SimMode::kCompressed, 11, 3);
    const BatchSummary summary =
        summarize(outcomes, ctx, ScheduleKind::kBbht, SimMode::kCompressed);

    const Json out = summary_json(summary, ctx, ScheduleKind::kBbht, SimMode::kCompressed, 11,
                                  fnv1a64("config"));
    CHECK(out["schema_version"] == 1);
    CHECK(out["schedule"] == "bbht");
    CHECK(out["mode"] == "compressed");
    CHECK(out["n"] == 4);
    CHECK(out["t"] == 1);
    CHECK(out["trials"] == 3);
    CHECK(out["closed_form_reference"].is_null());
    CHECK(out["metadata"]["tool_version"] == kVersion);
    CHECK(out["metadata"]["seed"] == 11);
    CHECK(out["metadata"]["generator"] == "mt19937_64");
    CHECK(out["metadata"]["config_hash"] == hex64(fnv1a64("config")));

    // Serialization is byte-stable for identical inputs.
    const Json again = summary_json(summary, ctx, ScheduleKind::kBbht, SimMode::kCompressed, 11,
                                    fnv1a64("config"));
    CHECK(out.dump(2) == again.dump(2));
}
