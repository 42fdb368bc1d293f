"""Verification sweeps and benchmarking across evaluation methods."""

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field

from .arithmetic import check_natural, isqrt
from .formula import (
    NAIVE_CAP_DEFAULT,
    CapExceededError,
    Method,
    pi_formula_naive,
    pi_formula_pruned,
)
from .set_model import (
    SET_MODEL_CAP_DEFAULT,
    pi_set_model,
    verify_difference_identity,
    verify_statement,
    verify_y_lcm_identity,
)
from .sieve import build_sieve, pi_sieve

REPORT_VERSION = 1

IDENTITY_CHECKS = ("statement", "difference", "y-lcm")


@dataclass(frozen=True)
class Mismatch:
    n: int
    method: str
    got: int
    expected: int


@dataclass
class VerifyReport:
    lo: int
    hi: int
    methods: list
    mismatches: list = field(default_factory=list)
    identity_checks: dict = field(default_factory=dict)  # check -> {run, failed}
    identity_failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    seed: int = 0
    elapsed: float = 0.0

    @property
    def passed(self):
        no_id_failures = all(c["failed"] == 0 for c in self.identity_checks.values())
        return not self.mismatches and no_id_failures


@dataclass
class BenchEntry:
    n: int
    method: str
    pi: int = 0
    elapsed: float = 0.0
    terms_visited: int = 0
    nonzero_terms: int = 0
    subtrees_pruned: int = 0
    skipped: bool = False
    reason: str = ""


@dataclass
class BenchReport:
    entries: list = field(default_factory=list)
    environment: str = ""
    agreement: bool = True


def compute_pi(method, n, sieve_table=None, naive_cap=NAIVE_CAP_DEFAULT,
               set_model_cap=SET_MODEL_CAP_DEFAULT):
    """Evaluate pi(n) with one method; returns a PiResult."""
    method = Method(method)
    if method is Method.NAIVE:
        return pi_formula_naive(n, naive_cap=naive_cap)
    if method is Method.PRUNED:
        return pi_formula_pruned(n)
    if method is Method.SET_MODEL:
        return pi_set_model(n, cap=set_model_cap)
    start = time.perf_counter()
    table = sieve_table if sieve_table is not None and sieve_table.limit >= n \
        else build_sieve(n)
    pi = pi_sieve(table, n)
    from .formula import EvaluationStats, PiResult
    return PiResult(n=n, pi=pi, method=Method.SIEVE,
                    stats=EvaluationStats(elapsed=time.perf_counter() - start))


def _random_tuple(rng, n):
    """A uniform-ish random valid index tuple for n (requires isqrt(n) >= 2)."""
    r = isqrt(n)
    pool = list(range(2, r + 1))
    size = rng.randint(1, min(len(pool), 6))
    return tuple(sorted(rng.sample(pool, size)))


def verify_sweep(lo, hi, methods, seed=0, random_identity_cases=0,
                 naive_cap=NAIVE_CAP_DEFAULT, set_model_cap=SET_MODEL_CAP_DEFAULT,
                 identity_n_max=500):
    """Compare each method against the sieve on [lo, hi], plus identity checks.

    Infeasible (n, method) pairs are skipped with a notation rather than
    failed.  The identity checks draw (n, tuple) pairs from a generator
    seeded with `seed`, so two runs with equal arguments produce equal
    reports (elapsed aside).
    """
    check_natural(lo, "lo")
    check_natural(hi, "hi")
    if lo < 1 or lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi}]; need 1 <= lo <= hi")
    methods = [Method(m) for m in methods]
    if not methods:
        raise ValueError("methods must be nonempty")
    start = time.perf_counter()
    table = build_sieve(hi)
    report = VerifyReport(lo=lo, hi=hi, methods=[m.value for m in methods], seed=seed)
    skipped_notes = set()
    for n in range(lo, hi + 1):
        expected = pi_sieve(table, n)
        for method in methods:
            if method is Method.SIEVE:
                continue  # the reference itself
            try:
                got = compute_pi(method, n, sieve_table=table,
                                 naive_cap=naive_cap,
                                 set_model_cap=set_model_cap).pi
            except CapExceededError as exc:
                skipped_notes.add(f"{method.value}: {exc}")
                continue
            if got != expected:
                report.mismatches.append(
                    Mismatch(n=n, method=method.value, got=got, expected=expected))
    report.skipped = sorted(skipped_notes)

    rng = random.Random(seed)
    counts = {check: {"run": 0, "failed": 0} for check in IDENTITY_CHECKS}
    for _ in range(random_identity_cases):
        n = rng.randint(4, identity_n_max)
        indices = _random_tuple(rng, n)
        for check, fn in (("statement", verify_statement),
                          ("difference", verify_difference_identity),
                          ("y-lcm", verify_y_lcm_identity)):
            result = fn(n, indices)
            counts[check]["run"] += 1
            if not result.passed:
                counts[check]["failed"] += 1
                report.identity_failures.append(
                    {"check": check, "n": n, "indices": list(indices),
                     "lhs": result.lhs, "rhs": result.rhs})
    report.identity_checks = counts
    report.elapsed = time.perf_counter() - start
    return report


def bench_run(n_values, methods, repetitions=1, environment=""):
    """Time each (n, method) pair; best-of-repetitions, monotonic clock."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    methods = [Method(m) for m in methods]
    report = BenchReport(environment=environment)
    for n in n_values:
        check_natural(n, "n")
        pis = {}
        for method in methods:
            entry = BenchEntry(n=n, method=method.value)
            try:
                best = None
                for _ in range(repetitions):
                    t0 = time.perf_counter()
                    result = compute_pi(method, n)
                    dt = time.perf_counter() - t0
                    if best is None or dt < best:
                        best = dt
                entry.pi = result.pi
                entry.elapsed = best
                entry.terms_visited = result.stats.terms_visited
                entry.nonzero_terms = result.stats.nonzero_terms
                entry.subtrees_pruned = result.stats.subtrees_pruned
                pis[method.value] = result.pi
            except CapExceededError as exc:
                entry.skipped = True
                entry.reason = str(exc)
            report.entries.append(entry)
        if len(set(pis.values())) > 1:
            report.agreement = False
    report.entries.sort(key=lambda e: (e.n, e.method))
    return report


# --- serialization -------------------------------------------------------

def verify_report_to_dict(report):
    return {
        "kind": "verify",
        "version": REPORT_VERSION,
        "range": [report.lo, report.hi],
        "methods": report.methods,
        "seed": report.seed,
        "mismatches": [
            {"n": m.n, "method": m.method, "got": m.got, "expected": m.expected}
            for m in report.mismatches
        ],
        "identity_checks": report.identity_checks,
        "identity_failures": report.identity_failures,
        "skipped": report.skipped,
        "passed": report.passed,
        "elapsed": report.elapsed,
    }


def bench_report_to_dict(report):
    return {
        "kind": "bench",
        "version": REPORT_VERSION,
        "environment": report.environment,
        "agreement": report.agreement,
        "entries": [
            {
                "n": e.n,
                "method": e.method,
                "pi": e.pi,
                "elapsed_ns": int(e.elapsed * 1e9),
                "terms_visited": e.terms_visited,
                "nonzero_terms": e.nonzero_terms,
                "subtrees_pruned": e.subtrees_pruned,
                "skipped": e.skipped,
                "reason": e.reason,
            }
            for e in report.entries
        ],
    }


def to_json(report):
    if isinstance(report, VerifyReport):
        payload = verify_report_to_dict(report)
    else:
        payload = bench_report_to_dict(report)
    return json.dumps(payload, sort_keys=True, indent=2)


def bench_entries_to_csv(report):
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["n", "method", "pi", "elapsed_ns", "terms_visited",
                     "nonzero_terms", "subtrees_pruned"])
    for e in report.entries:
        if e.skipped:
            continue
        writer.writerow([e.n, e.method, e.pi, int(e.elapsed * 1e9),
                         e.terms_visited, e.nonzero_terms, e.subtrees_pruned])
    return out.getvalue()
