"""Reduced Collatz dynamics: words, periods, residue classes, and range
verification over arbitrary-precision integers."""

from ._core import (
    CapExceededError,
    CheckpointIoError,
    CheckpointResumeError,
    MismatchError,
    apply_primed,
    apply_word,
    class_table,
    cmp_pow3_pow2,
    collatz_step,
    coverage,
    cross_check_coverage,
    enumerate_words,
    eval_int_expr,
    is_extendable_prefix,
    is_matched,
    is_reduced_form,
    minimal_period_bruteforce,
    original_dynamics,
    period_of,
    reduced_dynamics,
    residue_of_word,
    substr,
    verify_period,
    verify_range,
    verify_separation,
)

__all__ = [
    "CapExceededError",
    "CheckpointIoError",
    "CheckpointResumeError",
    "MismatchError",
    "apply_primed",
    "apply_word",
    "class_table",
    "cmp_pow3_pow2",
    "collatz_step",
    "coverage",
    "cross_check_coverage",
    "enumerate_words",
    "eval_int_expr",
    "is_extendable_prefix",
    "is_matched",
    "is_reduced_form",
    "minimal_period_bruteforce",
    "original_dynamics",
    "period_of",
    "reduced_dynamics",
    "residue_of_word",
    "substr",
    "verify_period",
    "verify_range",
    "verify_separation",
]
