"""Exact multiplicative arithmetic: Ramanujan sums, E, A, F_f and congruence counts."""

from ._core import (
    A,
    E,
    F,
    Ftau,
    GuardError,
    PrecisionError,
    asympt,
    builtin_pairs,
    count_congruence,
    count_singleton_divisor,
    f_r,
    h,
    ramanujan_sum,
    suite_names,
    verify,
)

__all__ = [
    "A",
    "E",
    "F",
    "Ftau",
    "GuardError",
    "PrecisionError",
    "asympt",
    "builtin_pairs",
    "count_congruence",
    "count_singleton_divisor",
    "f_r",
    "h",
    "ramanujan_sum",
    "suite_names",
    "verify",
]
