"""Python face of the jumbled-pattern-matching simulator core."""

from ._core import (
    __version__,
    compare_prep_to_linear,
    fingerprint_value,
    index_query,
    optimal_iterations,
    parikh_counts,
    prep_gate_counts,
    qubit_cap,
    run_batch,
    run_search,
    sliding_window_matches,
    success_probability_closed_form,
    verification_suite,
)

__all__ = [
    "__version__",
    "compare_prep_to_linear",
    "fingerprint_value",
    "index_query",
    "optimal_iterations",
    "parikh_counts",
    "prep_gate_counts",
    "qubit_cap",
    "run_batch",
    "run_search",
    "sliding_window_matches",
    "success_probability_closed_form",
    "verification_suite",
]
