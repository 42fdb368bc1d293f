"""Evaluators for the explicit inclusion-exclusion prime-counting formula.

pi(n) = (n - 1) + sum over all index tuples 2 <= i_1 < ... < i_s <= isqrt(n)
of (-1)^s * (floor(n/L) - floor((i_s^2 - 1)/L)), L = lcm(i_1, ..., i_s).

Two evaluators produce that sum: a naive one that enumerates every tuple,
and a pruned one that skips a subtree as soon as its running lcm passes n
(both floor terms are then zero, and the lcm only grows along extensions).
"""

import math
import time
from dataclasses import dataclass, field
from enum import Enum

from . import backend
from .arithmetic import MAX_N, check_natural

# Exhaustive enumeration touches 2^(isqrt(n)-1) - 1 tuples; 25 keeps a worst
# case around 16.7M tuples (n up to ~675).
NAIVE_CAP_DEFAULT = 25

# Above this n the pruned evaluator's "auto" strategy switches from the
# literal walk to the divisor-cancellation walk; see pi_formula_pruned.
COLLAPSE_CUTOFF_DEFAULT = 4096


class Method(str, Enum):
    NAIVE = "naive"
    PRUNED = "pruned"
    SET_MODEL = "set-model"
    SIEVE = "sieve"


class CapExceededError(ValueError):
    """An evaluator was asked for an n beyond its feasibility guard."""


@dataclass(frozen=True)
class TermRecord:
    indices: tuple
    lcm: int
    sign: int
    value: int


@dataclass
class EvaluationStats:
    terms_visited: int = 0
    nonzero_terms: int = 0
    subtrees_pruned: int = 0
    max_lcm_retained: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class PiResult:
    n: int
    pi: int
    method: Method
    stats: EvaluationStats = field(default_factory=EvaluationStats)


def validate_tuple(n, indices):
    """Check 2 <= i_1 < ... < i_s <= isqrt(n); raise ValueError otherwise."""
    check_natural(n, "n")
    indices = tuple(indices)
    if not indices:
        raise ValueError("index tuple must be nonempty")
    if indices[0] < 2:
        raise ValueError(f"index tuple must start at 2 or above, got {indices}")
    for a, b in zip(indices, indices[1:]):
        if b <= a:
            raise ValueError(f"index tuple must be strictly increasing, got {indices}")
    r = math.isqrt(n)
    if indices[-1] > r:
        raise ValueError(f"index tuple {indices} exceeds isqrt({n}) = {r}")
    return indices


def term_value(n, indices):
    """floor(n/L) - floor((i_s^2 - 1)/L) for one valid index tuple."""
    indices = validate_tuple(n, indices)
    lcm = math.lcm(*indices)
    top = indices[-1]
    return n // lcm - (top * top - 1) // lcm


def first_sum_term(n, i):
    """Simplified single-index term floor(n/i) - i + 1.

    Algebraically identical to term_value(n, (i,)); kept separate so the
    identity can be cross-checked instead of branched on.
    """
    check_natural(n, "n")
    check_natural(i, "i")
    if not 2 <= i <= math.isqrt(n):
        raise ValueError(f"i={i} out of range [2, isqrt({n})]")
    return n // i - i + 1


def _finish(n, acc, method, stats, elapsed):
    stats.elapsed = elapsed
    pi = n - 1 + acc
    if not 0 <= pi <= n:
        raise ArithmeticError(f"evaluator produced pi={pi} outside [0, {n}]")
    return PiResult(n=n, pi=pi, method=method, stats=stats)


def pi_formula_naive(n, naive_cap=NAIVE_CAP_DEFAULT, force=False):
    """Exhaustive evaluation: every tuple, no pruning."""
    check_natural(n, "n", maximum=MAX_N)
    if n == 0:
        return PiResult(n=0, pi=0, method=Method.NAIVE)
    r = math.isqrt(n)
    if r > naive_cap and not force:
        raise CapExceededError(
            f"isqrt({n}) = {r} exceeds the naive cap {naive_cap} "
            f"(2^{r - 1} - 1 tuples); raise naive_cap or pass force=True "
            "(--naive-cap / --force on the CLI)"
        )
    start = time.perf_counter()
    kern = backend.kernel()
    if r > 42 and kern.BACKEND_NAME == "c":
        # 64-bit lcm would overflow in the compiled walk; arbitrary
        # precision fallback.
        from . import _pykernel as kern
    acc, visited, nonzero, pruned, max_lcm = kern.naive_full(n)
    stats = EvaluationStats(visited, nonzero, pruned, max_lcm)
    return _finish(n, acc, Method.NAIVE, stats, time.perf_counter() - start)


def pi_formula_pruned(n, strategy="auto", collapse_cutoff=COLLAPSE_CUTOFF_DEFAULT):
    """LCM-pruned evaluation.

    strategy:
      "literal"  - the plain pruned depth-first walk; visits every tuple
                   with lcm <= n.  Infeasible for large n: the visit count
                   is the number of subsets of [2..isqrt(n)] with lcm <= n,
                   which passes 10^10 near n = 10^4 and 2^66 at n = 10^5.
      "collapse" - adds an exact cancellation: the first candidate dividing
                   the running lcm collapses the remainder of the node to a
                   single term.  Same pi, exponentially fewer nodes.
      "auto"     - literal up to collapse_cutoff, collapse beyond (default).
    """
    check_natural(n, "n", maximum=MAX_N)
    if strategy not in ("auto", "literal", "collapse"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if n == 0:
        return PiResult(n=0, pi=0, method=Method.PRUNED)
    if strategy == "auto":
        strategy = "literal" if n <= collapse_cutoff else "collapse"
    start = time.perf_counter()
    kern = backend.kernel()
    walk = kern.pruned_literal if strategy == "literal" else kern.pruned_collapse
    acc, visited, nonzero, pruned, max_lcm = walk(n)
    stats = EvaluationStats(visited, nonzero, pruned, max_lcm)
    return _finish(n, acc, Method.PRUNED, stats, time.perf_counter() - start)


def enumerate_terms(n, nonzero_only=False):
    """Stream TermRecords from the literal pruned walk.

    Depth-first, children in increasing next-index order, which makes the
    stream lexicographic in the tuple: (2), (2,3), (2,3,4), ..., (3), ...
    Tuples skipped by the lcm > n prune (value necessarily 0) are not
    yielded.
    """
    check_natural(n, "n", maximum=MAX_N)
    if n < 1:
        raise ValueError("enumerate_terms requires n >= 1")
    r = math.isqrt(n)

    def walk(prefix, lcm, start, sign):
        for c in range(start, r + 1):
            child = lcm // math.gcd(lcm, c) * c
            if child > n:
                continue
            value = n // child - (c * c - 1) // child
            indices = prefix + (c,)
            if value or not nonzero_only:
                yield TermRecord(indices=indices, lcm=child, sign=sign, value=value)
            yield from walk(indices, child, c + 1, -sign)

    yield from walk((), 1, 2, -1)
