#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qjpm/grover.hpp"
#include "qjpm/instances.hpp"
#include "qjpm/jumbled_index.hpp"
#include "qjpm/prep_circuit.hpp"
#include "qjpm/search.hpp"
#include "qjpm/translation.hpp"
#include "qjpm/verify.hpp"
#include "qjpm/version.hpp"

namespace py = pybind11;

namespace {

using namespace qjpm;

Alphabet make_alphabet(const std::string& text, const std::string& pattern,
                       const std::string& alphabet) {
    if (!alphabet.empty()) return Alphabet(alphabet);
    return Alphabet::from_text(text + pattern);
}

py::object big_int(const Fingerprint& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::dict outcome_to_dict(const SearchOutcome& o) {
    py::dict d;
    d["measured_position"] = o.measured_position;
    d["is_match"] = o.is_match;
    d["oracle_calls"] = o.oracle_calls;
    d["iterations_used"] = o.iterations_used;
    d["seed"] = o.seed;
    d["mode"] = mode_name(o.mode);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "simulator core for jumbled pattern matching with quantum search";
    m.attr("__version__") = kVersion;

    m.def(
        "sliding_window_matches",
        [](const std::string& text, const std::string& pattern, const std::string& alphabet) {
            const Alphabet a = make_alphabet(text, pattern, alphabet);
            return sliding_window_matches(map_to_symbols(text, a), map_to_symbols(pattern, a));
        },
        py::arg("text"), py::arg("pattern"), py::arg("alphabet") = "",
        "1-based window starts whose symbol counts equal the pattern's");

    m.def(
        "parikh_counts",
        [](const std::string& s, const std::string& alphabet) {
            const Alphabet a = make_alphabet(s, "", alphabet);
            return parikh(map_to_symbols(s, a)).counts;
        },
        py::arg("s"), py::arg("alphabet") = "", "per-symbol occurrence counts");

    m.def(
        "fingerprint_value",
        [](const std::string& s, const std::string& alphabet) {
            const Alphabet a = make_alphabet(s, "", alphabet);
            return big_int(
                fingerprint(map_to_symbols(s, a), PrimeCodec::first_primes_codec(a.size())));
        },
        py::arg("s"), py::arg("alphabet") = "",
        "product of the per-symbol primes over the whole string (exact int)");

    m.def(
        "index_query",
        [](const std::string& text, const std::string& pattern, const std::string& alphabet) {
            const Alphabet a = make_alphabet(text, pattern, alphabet);
            const SymbolString t = map_to_symbols(text, a);
            const SymbolString q = map_to_symbols(pattern, a);
            return index_query(build_jumbled_index(t, static_cast<std::uint32_t>(q.size())),
                               parikh(q));
        },
        py::arg("text"), py::arg("pattern"), py::arg("alphabet") = "",
        "same answer as sliding_window_matches, through the count-vector index");

    m.def("optimal_iterations", &optimal_iterations, py::arg("n"), py::arg("t"));
    m.def("success_probability_closed_form", &success_probability_closed_form, py::arg("n"),
          py::arg("t"), py::arg("r"));
    m.def("qubit_cap", &qubit_cap);

    m.def(
        "run_search",
        [](const std::string& text, const std::string& pattern, const std::string& schedule,
           const std::string& mode, std::uint64_t seed, const std::string& alphabet) {
            const Alphabet a = make_alphabet(text, pattern, alphabet);
            return outcome_to_dict(run_jpm_search(map_to_symbols(text, a),
                                                  map_to_symbols(pattern, a),
                                                  parse_schedule(schedule), parse_mode(mode),
                                                  seed));
        },
        py::arg("text"), py::arg("pattern"), py::arg("schedule") = "fixed",
        py::arg("mode") = "compressed", py::arg("seed") = 0, py::arg("alphabet") = "",
        "one seeded search trial; the measured position is classically verified");

    m.def(
        "run_batch",
        [](const std::string& text, const std::string& pattern, const std::string& schedule,
           const std::string& mode, std::uint64_t seed, std::size_t trials,
           const std::string& alphabet) {
            const Alphabet a = make_alphabet(text, pattern, alphabet);
            const SearchContext ctx =
                make_search_context(map_to_symbols(text, a), map_to_symbols(pattern, a));
            const ScheduleKind kind = parse_schedule(schedule);
            const SimMode sim = parse_mode(mode);
            const auto outcomes = run_trial_batch(ctx, kind, sim, seed, trials);
            const BatchSummary s = summarize(outcomes, ctx, kind, sim);
            py::dict d;
            d["trials"] = s.trials;
            d["n"] = ctx.n;
            d["t"] = ctx.marked.size();
            d["empirical_success_rate"] = s.empirical_success_rate;
            d["mean_oracle_calls"] = s.mean_oracle_calls;
            d["closed_form_reference"] =
                s.closed_form_reference ? py::cast(*s.closed_form_reference)
                                        : py::object(py::none());
            return d;
        },
        py::arg("text"), py::arg("pattern"), py::arg("schedule") = "fixed",
        py::arg("mode") = "compressed", py::arg("seed") = 0, py::arg("trials") = 100,
        py::arg("alphabet") = "", "independent seeded trials plus their summary");

    m.def(
        "compare_prep_to_linear",
        [](std::uint32_t s, std::uint32_t M) {
            const auto cmp = compare_to_eq5(s, M, std::size_t{1} << s);
            py::dict d;
            d["l2"] = cmp.l2;
            d["boundary_window_count"] = cmp.boundary_window_count;
            return d;
        },
        py::arg("s"), py::arg("registers"),
        "distance between the cyclic prep-circuit state and the linear-window state");

    m.def(
        "prep_gate_counts",
        [](std::uint32_t s, std::uint32_t M) {
            const ResourceCount rc = gate_counts(build_cyclic_window_prep_gates(s, M), true);
            py::dict d;
            d["H"] = rc.h;
            d["X"] = rc.x;
            d["CNOT"] = rc.cnot;
            d["MCX"] = rc.mcx;
            d["decomposed_total"] = rc.decomposed_total;
            return d;
        },
        py::arg("s"), py::arg("registers"),
        "gate totals of the preparation circuit, multi-controlled X expanded");

    m.def(
        "verification_suite",
        []() {
            py::list results;
            for (const CheckResult& r : run_verification_suite()) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                results.append(std::move(d));
            }
            return results;
        },
        "cross-module invariant checks; every entry should pass");
}
