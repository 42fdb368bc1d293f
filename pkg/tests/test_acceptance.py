"""Acceptance suite: one test per release criterion, strictest tolerances.

Every expected value is either the worked n=11 example, recomputed by the
sieve oracle in the same run, or cross-checked between independent
evaluation routes.  Each test prints one PASS line on success.
"""

import json
import math
import random
import subprocess
import sys
import time

import pytest

from picount.formula import (
    enumerate_terms,
    first_sum_term,
    pi_formula_naive,
    pi_formula_pruned,
    term_value,
)
from picount.set_model import (
    build_x,
    build_y,
    pi_set_model,
    verify_difference_identity,
    verify_statement,
    verify_y_lcm_identity,
)
from picount.sieve import build_sieve, is_prime, pi_sieve

SEED = 20260823


@pytest.fixture(scope="module")
def sieve_2000():
    return build_sieve(2000)


@pytest.fixture(scope="module")
def pruned_upto_2000():
    """pi_formula_pruned(n) for every n in [1, 2000]; shared by criteria 3 and 8."""
    t0 = time.perf_counter()
    values = {n: pi_formula_pruned(n).pi for n in range(1, 2001)}
    print(f"\n[pruned sweep 1..2000 took {time.perf_counter() - t0:.1f}s]")
    return values


def all_tuples(r):
    """Every strictly increasing tuple over [2, r], depth-first."""
    out = []

    def extend(prefix, start):
        for c in range(start, r + 1):
            tup = prefix + (c,)
            out.append(tup)
            extend(tup, c + 1)

    extend((), 2)
    return out


def test_criterion_1_paper_worked_example():
    table = build_sieve(11)
    results = {
        "naive": pi_formula_naive(11).pi,
        "pruned": pi_formula_pruned(11).pi,
        "set-model": pi_set_model(11).pi,
        "sieve": pi_sieve(table, 11),
    }
    assert set(results.values()) == {5}, results
    assert build_x(11, 2).elements == (4, 6, 8, 10)
    assert build_x(11, 3).elements == (9,)
    print("ACCEPTANCE 1: PASS - pi(11) = 5 via all four methods, "
          "X_2 and X_3 reproduced exactly")


def test_criterion_2_evaluator_equivalence_sweep():
    table = build_sieve(400)
    mismatches = []
    for n in range(1, 401):
        expected = pi_sieve(table, n)
        got = {
            "naive": pi_formula_naive(n).pi,
            "pruned": pi_formula_pruned(n).pi,
            "set-model": pi_set_model(n).pi,
        }
        for method, value in got.items():
            if value != expected:
                mismatches.append((n, method, value, expected))
    assert mismatches == []
    print("ACCEPTANCE 2: PASS - naive = pruned = set-model = sieve "
          "for all n in [1, 400], zero mismatches")


def test_criterion_3_pruned_sieve_sweep_and_spots(sieve_2000, pruned_upto_2000):
    mismatches = [n for n in range(1, 2001)
                  if pruned_upto_2000[n] != pi_sieve(sieve_2000, n)]
    assert mismatches == []
    runtimes = {}
    for n in (10**4, 10**5):
        expected = pi_sieve(build_sieve(n), n)  # recomputed, not a constant
        t0 = time.perf_counter()
        got = pi_formula_pruned(n).pi
        runtimes[n] = time.perf_counter() - t0
        assert got == expected, (n, got, expected)
    print("ACCEPTANCE 3: PASS - pruned = sieve on [1, 2000]; "
          f"pruned(10^4) and pruned(10^5) match the recomputed sieve "
          f"(runtimes {runtimes[10**4]:.2f}s, {runtimes[10**5]:.2f}s)")


def _identity_schedule():
    """Exhaustive (n in [4, 144], every tuple) plus 10^4 seeded random cases."""
    for n in range(4, 145):
        for indices in all_tuples(math.isqrt(n)):
            yield n, indices
    rng = random.Random(SEED)
    for _ in range(10**4):
        n = rng.randint(4, 500)
        pool = list(range(2, math.isqrt(n) + 1))
        size = rng.randint(1, min(6, len(pool)))
        yield n, tuple(sorted(rng.sample(pool, size)))


def test_criterion_4_statement_identity():
    checked = 0
    for n, indices in _identity_schedule():
        report = verify_statement(n, indices)
        assert report.passed, (n, indices, report.lhs, report.rhs)
        checked += 1
    print(f"ACCEPTANCE 4: PASS - statement identity exact on {checked} cases "
          "(exhaustive n in [4, 144] plus 10^4 random)")


def test_criterion_5_difference_and_y_lcm_identities():
    checked = 0
    for n, indices in _identity_schedule():
        diff = verify_difference_identity(n, indices)
        ylcm = verify_y_lcm_identity(n, indices)
        assert diff.passed, (n, indices, diff.lhs, diff.rhs)
        assert ylcm.passed, (n, indices, ylcm.lhs, ylcm.rhs)
        checked += 1
    for i in range(2, 51):
        for bound in range(2001):
            assert len(build_y(bound, i).elements) == bound // i, (i, bound)
    print(f"ACCEPTANCE 5: PASS - difference and Y-lcm identities exact on "
          f"{checked} cases; induction base case |Y_i(b)| = b//i verified")


def test_criterion_6_pruning_soundness():
    rng = random.Random(SEED + 1)
    sampled = 0
    while sampled < 10**4:
        n = rng.randint(4, 400)
        r = math.isqrt(n)
        pool = list(range(2, r + 1))
        size = rng.randint(1, min(6, len(pool)))
        indices = tuple(sorted(rng.sample(pool, size)))
        lcm = math.lcm(*indices)
        if lcm <= n:
            continue
        assert term_value(n, indices) == 0, (n, indices)
        for ext in range(indices[-1] + 1, r + 1):
            assert math.lcm(lcm, ext) > n, (n, indices, ext)
        sampled += 1
    for n in range(1, 401):
        naive = pi_formula_naive(n).stats.nonzero_terms
        pruned = pi_formula_pruned(n, strategy="literal").stats.nonzero_terms
        assert naive == pruned, n
    print("ACCEPTANCE 6: PASS - 10^4 over-lcm tuples all have value 0 with "
          "over-lcm extensions; naive and pruned agree on nonzero-term "
          "counts for n <= 400")


def test_criterion_7_first_sum_simplification():
    for n in range(4, 2001):
        for i in range(2, math.isqrt(n) + 1):
            assert first_sum_term(n, i) == term_value(n, (i,)), (n, i)
    print("ACCEPTANCE 7: PASS - first_sum_term(n, i) = term_value(n, (i,)) "
          "for all n <= 2000, i in [2, isqrt(n)]")


def test_criterion_8_step_property(sieve_2000, pruned_upto_2000):
    for n in range(2, 2001):
        step = pruned_upto_2000[n] - pruned_upto_2000[n - 1]
        assert step in (0, 1), n
        assert (step == 1) == is_prime(sieve_2000, n), n
    print("ACCEPTANCE 8: PASS - pi steps by 0/1 on [2, 2000], stepping "
          "exactly at sieve primes")


def test_criterion_9_cli_contract(tmp_path):
    cli = [sys.executable, "-m", "picount.cli"]

    def run(*args):
        return subprocess.run(cli + list(args), capture_output=True, text=True)

    assert run("pi", "11").stdout.strip() == "5"
    assert run("pi", "11").returncode == 0
    assert run("pi", "not-a-number").returncode == 2
    assert run("pi", "100000", "--method", "naive").returncode == 2
    assert run("grid", "500").returncode == 2

    # JSON validity
    verify = run("--quiet", "verify", "--max-n", "60",
                 "--methods", "naive,pruned,set-model", "--identity-cases", "30")
    assert verify.returncode == 0
    assert json.loads(verify.stdout)["passed"] is True
    bench = run("--quiet", "bench", "--n-list", "11,100",
                "--methods", "pruned,sieve")
    assert bench.returncode == 0
    json.loads(bench.stdout)

    # determinism of seeded verify reports
    outputs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        proc = run("--quiet", "--seed", "5", "verify", "--max-n", "40",
                   "--methods", "pruned", "--identity-cases", "25",
                   "--output", str(path))
        assert proc.returncode == 0
        payload = json.loads(path.read_text())
        payload.pop("elapsed")
        outputs.append(payload)
    assert outputs[0] == outputs[1]
    print("ACCEPTANCE 9: PASS - CLI exit statuses, JSON validity and "
          "seeded-report determinism hold in spawned processes")
