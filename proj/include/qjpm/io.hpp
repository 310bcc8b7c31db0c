#pragma once

#include <json.hpp>
#include <string>

#include "qjpm/circuit.hpp"
#include "qjpm/jumbled_index.hpp"
#include "qjpm/quantum_state.hpp"
#include "qjpm/search.hpp"
#include "qjpm/translation.hpp"

namespace qjpm {

// Insertion-ordered JSON so every dump is byte-stable for a given input.
using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

// Whole file as a string, with one trailing newline (CRLF or LF) stripped so
// that `echo text > file` round-trips; all other bytes are kept verbatim.
std::string read_text_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// {window_size, entries: [{counts, positions}]}, entries ordered by counts.
Json index_to_json(const JumbledIndex& index);

// {metadata: {mode, n | (s, registers)}, amplitudes: [[re, im], ...]}
Json state_to_json(const CompressedState& state);
Json state_to_json(const FullState& state);

// {width, gates: [{kind, controls, targets}, ...]}
Json circuit_to_json(const Circuit& circuit);

// {label: prime, ...} in alphabet order.
Json codec_to_json(const PrimeCodec& codec, const Alphabet& alphabet);

// Columns: k, count_<label>..., fingerprint. Requires a both-sided table.
std::string window_table_csv(const WindowTable& table, const Alphabet& alphabet);

// Columns: s, M, H, X, CNOT, MCX, decomposed_total.
struct ResourceRow {
    std::uint32_t s = 0;
    std::uint32_t M = 0;
    ResourceCount counts;
};
std::string resource_report_csv(const std::vector<ResourceRow>& rows,
                                const std::vector<std::string>& footnotes = {});

// The full gate-growth report over a (s, M) grid: per-point decomposed
// totals, the fitted bounding constant C = max decomposed_total/(M*s^3), and
// a footnote flagging that the per-MCX cost grows with the control count
// under the ancilla-free decomposition (measured, not asserted).
struct GateGrowthReport {
    std::vector<ResourceRow> rows;
    double bound_constant = 0.0;
    std::string csv;
};
GateGrowthReport gate_growth_report(const std::vector<std::uint32_t>& s_list,
                                    const std::vector<std::uint32_t>& m_list);

// Columns: trial, seed, schedule, mode, n, t, iterations, oracle_calls,
// measured_position, is_match.
std::string trials_csv(const std::vector<SearchOutcome>& outcomes, const SearchContext& ctx,
                       ScheduleKind schedule, SimMode mode);
Json trials_json(const std::vector<SearchOutcome>& outcomes, const SearchContext& ctx,
                 ScheduleKind schedule, SimMode mode);

// Metadata block embedded in every emitted summary.
Json run_metadata(std::uint64_t root_seed, std::uint64_t config_hash);

Json summary_json(const BatchSummary& summary, const SearchContext& ctx, ScheduleKind schedule,
                  SimMode mode, std::uint64_t root_seed, std::uint64_t config_hash);

}  // namespace qjpm
