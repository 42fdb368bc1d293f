"""Sieve of Eratosthenes oracle: primality, prefix prime counts, composites."""

from dataclasses import dataclass

import numpy as np

from .arithmetic import check_natural, isqrt

# Plain (non-segmented) sieve; enough for desk-scale verification.
DEFAULT_LIMIT_GUARD = 10**8


@dataclass(frozen=True)
class SieveTable:
    limit: int
    is_prime: np.ndarray  # bool, indexed 0..limit
    pi_prefix: np.ndarray  # int64, pi_prefix[k] == number of primes <= k

    def __post_init__(self):
        self.is_prime.setflags(write=False)
        self.pi_prefix.setflags(write=False)


def build_sieve(limit, guard=DEFAULT_LIMIT_GUARD):
    """Sieve [0, limit] and precompute prefix prime counts."""
    check_natural(limit, "limit")
    if limit > guard:
        raise ValueError(f"sieve limit {limit} exceeds memory guard {guard}")
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[: min(2, limit + 1)] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    pi_prefix = np.cumsum(is_prime, dtype=np.int64)
    return SieveTable(limit=limit, is_prime=is_prime, pi_prefix=pi_prefix)


def pi_sieve(table, n):
    """Number of primes <= n, read off the precomputed prefix."""
    check_natural(n, "n")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds sieve limit {table.limit}")
    return int(table.pi_prefix[n])


def is_prime(table, n):
    check_natural(n, "n")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds sieve limit {table.limit}")
    return bool(table.is_prime[n])


def composites_upto(table, n):
    """Sorted list of composite numbers in [2, n]."""
    check_natural(n, "n")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds sieve limit {table.limit}")
    if n < 2:
        return []
    flags = table.is_prime[2 : n + 1]
    return [int(k) for k in np.nonzero(~flags)[0] + 2]
