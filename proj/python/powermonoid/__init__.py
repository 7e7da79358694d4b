"""Exact computation in the reduced power monoid of the integers."""

from ._core import (
    ParseError,
    apply,
    bdim,
    factorizations,
    format_set,
    interval,
    is_atom,
    kfold,
    parse_set,
    run_cli,
    runs,
    search_window,
    sumset,
    sumset_naive,
    verify,
)

__all__ = [
    "ParseError",
    "apply",
    "bdim",
    "factorizations",
    "format_set",
    "interval",
    "is_atom",
    "kfold",
    "parse_set",
    "run_cli",
    "runs",
    "search_window",
    "sumset",
    "sumset_naive",
    "verify",
]
