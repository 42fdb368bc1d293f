"""Prime counting via an explicit inclusion-exclusion formula.

Three mutually-checking evaluators (naive, lcm-pruned, explicit set model)
plus a sieve-of-Eratosthenes oracle, a verification/benchmark harness and a
CLI.  The hot enumeration loops live in a compiled extension with a pure
Python fallback; see picount.backend.
"""

from .arithmetic import EXCEEDED, MAX_N, floor_div, gcd, isqrt, lcm_capped
from .backend import backend_name
from .formula import (
    CapExceededError,
    EvaluationStats,
    Method,
    PiResult,
    TermRecord,
    enumerate_terms,
    first_sum_term,
    pi_formula_naive,
    pi_formula_pruned,
    term_value,
)
from .harness import BenchReport, VerifyReport, bench_run, verify_sweep
from .set_model import (
    ColumnSet,
    IdentityReport,
    build_x,
    build_y,
    intersect_x_explicit,
    pi_set_model,
    render_grid,
    union_x,
    verify_difference_identity,
    verify_statement,
    verify_y_lcm_identity,
)
from .sieve import SieveTable, build_sieve, composites_upto, pi_sieve

__version__ = "0.1.0"

__all__ = [
    "EXCEEDED",
    "MAX_N",
    "BenchReport",
    "CapExceededError",
    "ColumnSet",
    "EvaluationStats",
    "IdentityReport",
    "Method",
    "PiResult",
    "SieveTable",
    "TermRecord",
    "VerifyReport",
    "backend_name",
    "bench_run",
    "build_sieve",
    "build_x",
    "build_y",
    "composites_upto",
    "enumerate_terms",
    "first_sum_term",
    "floor_div",
    "gcd",
    "intersect_x_explicit",
    "isqrt",
    "lcm_capped",
    "pi_formula_naive",
    "pi_formula_pruned",
    "pi_set_model",
    "pi_sieve",
    "render_grid",
    "term_value",
    "union_x",
    "verify_difference_identity",
    "verify_statement",
    "verify_sweep",
    "verify_y_lcm_identity",
]
