"""Exact Temperley-Lieb, Jones-Wenzl and oriented-strand computations."""

from ._popswitch import (
    DomainError,
    basis_size,
    catalan,
    decompose,
    jones_wenzl,
    jw_properties,
    jw_trace,
    quantum_binom,
    quantum_int,
    quantum_int_at,
    run_suite,
    suite_names,
    verify_cor_q,
    verify_lemma_q,
)

__all__ = [
    "DomainError",
    "basis_size",
    "catalan",
    "decompose",
    "jones_wenzl",
    "jw_properties",
    "jw_trace",
    "quantum_binom",
    "quantum_int",
    "quantum_int_at",
    "run_suite",
    "suite_names",
    "verify_cor_q",
    "verify_lemma_q",
]
