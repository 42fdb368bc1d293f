"""Explicit set realization of the column sets behind the formula.

X_i(n) = { i*j : j >= i, i*j <= n } is column i of the multiplication grid
restricted to the diagonal and above; Y_i(bound) drops the j >= i condition.
Everything here works on materialized sorted sequences so that the identity
checks count actual elements, never floor divisions.
"""

import math
import time
from dataclasses import dataclass

from . import backend
from .arithmetic import check_natural
from .formula import (
    CapExceededError,
    EvaluationStats,
    Method,
    PiResult,
    term_value,
    validate_tuple,
)

# Memory guard for the materialized-set evaluator.
SET_MODEL_CAP_DEFAULT = 10**5

GRID_LIMIT = 200


@dataclass(frozen=True)
class ColumnSet:
    kind: str  # "X" or "Y"
    index: int
    bound: int
    elements: tuple


@dataclass(frozen=True)
class IdentityReport:
    check: str
    n: int
    indices: tuple
    lhs: int
    rhs: int
    passed: bool


def build_x(n, i):
    """Column set X_i: multiples i*j with j >= i, capped at n."""
    check_natural(n, "n")
    check_natural(i, "i")
    if i < 2:
        raise ValueError(f"X columns start at i=2, got {i}")
    return ColumnSet(kind="X", index=i, bound=n,
                     elements=tuple(range(i * i, n + 1, i)))


def build_y(bound, i):
    """Column set Y_i: all multiples of i up to bound (j >= 1)."""
    check_natural(bound, "bound")
    check_natural(i, "i")
    if i < 2:
        raise ValueError(f"Y columns start at i=2, got {i}")
    return ColumnSet(kind="Y", index=i, bound=bound,
                     elements=tuple(range(i, bound + 1, i)))


def _intersect_sorted(a, b):
    """Linear merge intersection of two sorted sequences."""
    out = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        if a[ia] == b[ib]:
            out.append(a[ia])
            ia += 1
            ib += 1
        elif a[ia] < b[ib]:
            ia += 1
        else:
            ib += 1
    return out


def _intersect_columns(columns):
    cur = list(columns[0].elements)
    for col in columns[1:]:
        cur = _intersect_sorted(cur, col.elements)
    return cur


def union_x(n):
    """Union of all X columns: exactly the composites in [2, n]."""
    check_natural(n, "n")
    members = set()
    for i in range(2, math.isqrt(n) + 1):
        members.update(build_x(n, i).elements)
    return sorted(members)


def intersect_x_explicit(n, indices):
    """Cardinality of the literal intersection of the X column sets."""
    indices = validate_tuple(n, indices)
    return len(_intersect_columns([build_x(n, i) for i in indices]))


def verify_statement(n, indices):
    """Explicit |X_i1 ∩ ... ∩ X_is| against the lcm floor-difference formula."""
    indices = validate_tuple(n, indices)
    lhs = intersect_x_explicit(n, indices)
    rhs = term_value(n, indices)
    return IdentityReport(check="statement", n=n, indices=indices,
                          lhs=lhs, rhs=rhs, passed=lhs == rhs)


def verify_difference_identity(n, indices):
    """|∩ X| against |∩ Y(n)| - |∩ Y(i_s^2 - 1)|, all from explicit sets."""
    indices = validate_tuple(n, indices)
    lhs = intersect_x_explicit(n, indices)
    top = indices[-1]
    at_n = len(_intersect_columns([build_y(n, i) for i in indices]))
    below = len(_intersect_columns([build_y(top * top - 1, i) for i in indices]))
    rhs = at_n - below
    return IdentityReport(check="difference", n=n, indices=indices,
                          lhs=lhs, rhs=rhs, passed=lhs == rhs)


def verify_y_lcm_identity(bound, indices):
    """|∩ Y(bound)| against floor(bound / lcm); valid for any bound."""
    check_natural(bound, "bound")
    indices = tuple(indices)
    if not indices or indices[0] < 2:
        raise ValueError(f"invalid index tuple {indices}")
    for a, b in zip(indices, indices[1:]):
        if b <= a:
            raise ValueError(f"index tuple must be strictly increasing, got {indices}")
    lhs = len(_intersect_columns([build_y(bound, i) for i in indices]))
    rhs = bound // math.lcm(*indices)
    return IdentityReport(check="y-lcm", n=bound, indices=indices,
                          lhs=lhs, rhs=rhs, passed=lhs == rhs)


def pi_set_model(n, cap=SET_MODEL_CAP_DEFAULT):
    """pi(n) = n - 1 - |X|, with |X| computed two independent ways.

    (a) directly as the size of the materialized union, and (b) by literal
    inclusion-exclusion over explicit column intersections (same tuple set
    as the pruned formula walk).  A disagreement raises: it would mean the
    set model contradicts itself.
    """
    check_natural(n, "n")
    if n < 1:
        return PiResult(n=0, pi=0, method=Method.SET_MODEL)
    if n > cap:
        raise CapExceededError(
            f"set-model evaluator capped at {cap} (memory guard); "
            "raise cap= to override"
        )
    start = time.perf_counter()
    union_size = len(union_x(n))
    ie_size, visited = backend.kernel().set_model_ie(n)
    if union_size != ie_size:
        raise ArithmeticError(
            f"set model inconsistent at n={n}: |union| = {union_size}, "
            f"inclusion-exclusion gives {ie_size}"
        )
    stats = EvaluationStats(terms_visited=visited,
                            elapsed=time.perf_counter() - start)
    return PiResult(n=n, pi=n - 1 - union_size, method=Method.SET_MODEL,
                    stats=stats)


def render_grid(n):
    """Plain-text rendering of the i*j multiplication grid up to n.

    Column i carries i*j going up; entries in X_i (j >= i, i >= 2) get a
    trailing '*' so the at-or-above-diagonal region stands out.
    """
    check_natural(n, "n")
    if not 1 <= n <= GRID_LIMIT:
        raise ValueError(f"grid rendering limited to 1 <= n <= {GRID_LIMIT}")
    width = len(str(n)) + 1
    label_w = len(str(n))
    lines = []
    for j in range(n, 0, -1):
        cells = []
        for i in range(1, n // j + 1):
            mark = "*" if i >= 2 and j >= i else " "
            cells.append(f"{i * j}{mark}".rjust(width))
        lines.append(f"{str(j).rjust(label_w)} |" + "".join(cells))
    axis = " " * label_w + " +" + "-" * (width * n)
    labels = " " * label_w + "  " + "".join(str(i).rjust(width) for i in range(1, n + 1))
    lines.append(axis)
    lines.append(labels)
    return "\n".join(lines)
