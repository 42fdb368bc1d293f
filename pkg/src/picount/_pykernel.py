"""Pure-Python enumeration kernels.

Fallback used when the compiled extension is unavailable (or disabled via
PICOUNT_BACKEND=python).  Same contracts as picount._kernel:

every kernel walks index tuples 2 <= i_1 < ... < i_s <= isqrt(n) depth-first
in increasing next-index order and returns aggregate counters, where
``acc`` is the signed sum over visited tuples of (-1)^s * term value and a
tuple's term value is floor(n/L) - floor((i_s^2-1)/L) with L the tuple lcm.
"""

import math
import sys

BACKEND_NAME = "python"

# Literal DFS paths can be as long as the number of divisors of the lcm,
# comfortably below this.
_MIN_RECURSION = 10_000


def _ensure_recursion_headroom():
    if sys.getrecursionlimit() < _MIN_RECURSION:
        sys.setrecursionlimit(_MIN_RECURSION)


def pruned_literal(n):
    """LCM-pruned exhaustive walk: skip a subtree once its lcm exceeds n.

    Returns (acc, visited, nonzero, pruned_subtrees, max_lcm).
    """
    _ensure_recursion_headroom()
    r = math.isqrt(n)
    gcd = math.gcd
    stats = [0, 0, 0, 0]  # visited, nonzero, pruned, max_lcm

    def walk(lcm, start, sign):
        acc = 0
        for c in range(start, r + 1):
            child = lcm // gcd(lcm, c) * c
            if child > n:
                stats[2] += 1
                continue
            value = n // child - (c * c - 1) // child
            stats[0] += 1
            if value:
                stats[1] += 1
            if child > stats[3]:
                stats[3] = child
            acc += sign * value
            acc += walk(child, c + 1, -sign)
        return acc

    acc = walk(1, 2, -1)
    return acc, stats[0], stats[1], stats[2], stats[3]


def pruned_collapse(n):
    """Pruned walk with the divisor-cancellation shortcut.

    At a node with lcm L, the first candidate c that divides L makes every
    deeper and later tuple at this node cancel in +/- pairs (adding c changes
    neither the lcm nor the eventual maximum index, only the sign), leaving
    exactly the single tuple ending at c.  Same signed total as the literal
    walk; far fewer nodes.
    """
    _ensure_recursion_headroom()
    r = math.isqrt(n)
    gcd = math.gcd
    stats = [0, 0, 0, 0]

    def walk(lcm, start, sign):
        acc = 0
        for c in range(start, r + 1):
            g = gcd(lcm, c)
            if g == c:
                value = n // lcm - (c * c - 1) // lcm
                stats[0] += 1
                if value:
                    stats[1] += 1
                return acc + sign * value
            child = lcm // g * c
            if child > n:
                stats[2] += 1
                continue
            value = n // child - (c * c - 1) // child
            stats[0] += 1
            if value:
                stats[1] += 1
            if child > stats[3]:
                stats[3] = child
            acc += sign * value
            acc += walk(child, c + 1, -sign)
        return acc

    acc = walk(1, 2, -1)
    return acc, stats[0], stats[1], stats[2], stats[3]


def naive_full(n):
    """Every one of the 2^(r-1) - 1 tuples, no pruning at all."""
    _ensure_recursion_headroom()
    r = math.isqrt(n)
    gcd = math.gcd
    stats = [0, 0, 0, 0]

    def walk(lcm, start, sign):
        acc = 0
        for c in range(start, r + 1):
            child = lcm // gcd(lcm, c) * c
            value = n // child - (c * c - 1) // child
            stats[0] += 1
            if value:
                stats[1] += 1
            if child <= n and child > stats[3]:
                stats[3] = child
            acc += sign * value
            acc += walk(child, c + 1, -sign)
        return acc

    acc = walk(1, 2, -1)
    return acc, stats[0], stats[1], stats[2], stats[3]


def set_model_ie(n):
    """Inclusion-exclusion over literal, materialized column sets.

    Visits exactly the tuple set of pruned_literal (the lcm > n prune is
    reused), but each cardinality comes from intersecting explicit sets,
    never from the floor-division formula.  Returns (union_size, visited)
    where union_size is the alternating sum Sigma (-1)^(s+1) |X_i1 ∩...∩ X_is|.
    """
    _ensure_recursion_headroom()
    r = math.isqrt(n)
    gcd = math.gcd
    columns = {i: frozenset(range(i * i, n + 1, i)) for i in range(2, r + 1)}
    visited = [0]

    def walk(lcm, members, start, sign):
        acc = 0
        for c in range(start, r + 1):
            child = lcm // gcd(lcm, c) * c
            if child > n:
                continue
            inter = members & columns[c] if members is not None else columns[c]
            visited[0] += 1
            acc += sign * len(inter)
            acc += walk(child, inter, c + 1, -sign)
        return acc

    total = walk(1, None, 2, +1)
    return total, visited[0]
