"""Command-line front end.

Exit status contract: 0 success, 1 verification mismatch or benchmark
disagreement, 2 usage errors and infeasible requests.
"""

import argparse
import json
import os
import sys
from dataclasses import asdict

from .arithmetic import MAX_N
from .backend import backend_name
from .formula import (
    NAIVE_CAP_DEFAULT,
    CapExceededError,
    enumerate_terms,
    pi_formula_naive,
    pi_formula_pruned,
)
from .harness import (
    bench_entries_to_csv,
    bench_run,
    to_json,
    verify_sweep,
)
from .set_model import SET_MODEL_CAP_DEFAULT, pi_set_model, render_grid
from .sieve import build_sieve, pi_sieve

MAX_N_ENV = "PICOUNT_MAX_N"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _natural(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return value


def _method_list(text):
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise argparse.ArgumentTypeError("empty method list")
    return names


def _n_list(text):
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty n list")
    return [_natural(t) for t in items]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="picount",
        description="Prime counting via an explicit inclusion-exclusion "
        "formula, with a sieve oracle, set-model verification and benchmarks.",
        epilog=f"The global n guard (default {MAX_N}) can also be overridden "
        f"with the {MAX_N_ENV} environment variable.",
    )
    parser.add_argument("--max-n", type=_natural, dest="guard", default=None,
                        help="override the global n guard")
    parser.add_argument("--seed", type=_natural, default=0,
                        help="seed for randomized identity checks")
    parser.add_argument("--format", choices=["text", "json", "csv"],
                        default="text", help="output format where applicable")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress progress chatter on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p_pi = sub.add_parser("pi", help="compute pi(n)")
    p_pi.add_argument("n", type=_natural)
    p_pi.add_argument("--method", choices=["pruned", "naive", "set-model", "sieve"],
                      default="pruned")
    p_pi.add_argument("--stats", action="store_true",
                      help="also print evaluation stats as JSON")
    p_pi.add_argument("--naive-cap", type=_natural, default=NAIVE_CAP_DEFAULT,
                      help="isqrt(n) ceiling for the naive method")
    p_pi.add_argument("--force", action="store_true",
                      help="run the naive method past its cap")
    p_pi.add_argument("--set-model-cap", type=_natural,
                      default=SET_MODEL_CAP_DEFAULT,
                      help="n ceiling for the set-model method")
    p_pi.add_argument("--strategy", choices=["auto", "literal", "collapse"],
                      default="auto", help="pruned-walk strategy")

    p_terms = sub.add_parser("terms", help="list the formula's summands")
    p_terms.add_argument("n", type=_natural)
    p_terms.add_argument("--nonzero-only", action="store_true")

    p_grid = sub.add_parser("grid", help="render the multiplication grid")
    p_grid.add_argument("n", type=_natural)

    p_verify = sub.add_parser("verify", help="sweep methods against the sieve")
    p_verify.add_argument("--max-n", type=_natural, required=True,
                          help="verify every n in [1, MAX_N]")
    p_verify.add_argument("--methods", type=_method_list,
                          default=["pruned"],
                          help="comma-separated: naive,pruned,set-model")
    p_verify.add_argument("--identity-cases", type=_natural, default=0,
                          help="number of seeded random identity checks")
    p_verify.add_argument("--naive-cap", type=_natural, default=NAIVE_CAP_DEFAULT)
    p_verify.add_argument("--output", default=None,
                          help="write the JSON report here instead of stdout")

    p_bench = sub.add_parser("bench", help="time methods and report")
    p_bench.add_argument("--n-list", type=_n_list, required=True,
                         help="comma-separated n values")
    p_bench.add_argument("--methods", type=_method_list,
                         default=["pruned", "sieve"])
    p_bench.add_argument("--reps", type=_natural, default=1)
    p_bench.add_argument("--output", default=None)

    return parser


def _chatter(args, message):
    if not args.quiet:
        print(message, file=sys.stderr)


def _guard(args):
    if args.guard is not None:
        return args.guard
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            return int(env, 10)
        except ValueError:
            raise SystemExit(f"{MAX_N_ENV}={env!r} is not an integer")
    return MAX_N


def _check_guard(args, n):
    guard = _guard(args)
    if n > guard:
        print(f"n={n} exceeds the n guard {guard} "
              f"(--max-n / {MAX_N_ENV} to override)", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_pi(args):
    _check_guard(args, args.n)
    try:
        if args.method == "pruned":
            result = pi_formula_pruned(args.n, strategy=args.strategy)
        elif args.method == "naive":
            result = pi_formula_naive(args.n, naive_cap=args.naive_cap,
                                      force=args.force)
        elif args.method == "set-model":
            result = pi_set_model(args.n, cap=args.set_model_cap)
        else:
            result = None
    except CapExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if result is None:
        table = build_sieve(args.n)
        print(pi_sieve(table, args.n))
        return EXIT_OK
    print(result.pi)
    if args.stats:
        print(json.dumps(asdict(result.stats), sort_keys=True))
    return EXIT_OK


def cmd_terms(args):
    _check_guard(args, args.n)
    if args.n < 1:
        print("terms requires n >= 1", file=sys.stderr)
        return EXIT_USAGE
    records = enumerate_terms(args.n, nonzero_only=args.nonzero_only)
    if args.format == "json":
        payload = [
            {"tuple": list(t.indices), "s": len(t.indices), "sign": t.sign,
             "lcm": t.lcm, "value": t.value}
            for t in records
        ]
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print("tuple,s,sign,lcm,value")
        for t in records:
            tuple_text = "(" + " ".join(str(i) for i in t.indices) + ")"
            print(f"{tuple_text},{len(t.indices)},{t.sign:+d},{t.lcm},{t.value}")
    else:
        for t in records:
            tuple_text = "(" + ",".join(str(i) for i in t.indices) + ")"
            sign = "+" if t.sign > 0 else "-"
            print(f"{tuple_text} s={len(t.indices)} sign={sign} "
                  f"lcm={t.lcm} value={t.value}")
    return EXIT_OK


def cmd_grid(args):
    try:
        print(render_grid(args.n))
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(args):
    if args.max_n < 1:
        print("verify requires --max-n >= 1", file=sys.stderr)
        return EXIT_USAGE
    _check_guard(args, args.max_n)
    _chatter(args, f"verifying methods {args.methods} on [1, {args.max_n}] "
                   f"(backend: {backend_name()})")
    try:
        report = verify_sweep(1, args.max_n, args.methods, seed=args.seed,
                              random_identity_cases=args.identity_cases,
                              naive_cap=args.naive_cap)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    payload = to_json(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        _chatter(args, f"report written to {args.output}")
    else:
        print(payload)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_bench(args):
    if args.reps < 1:
        print("bench requires --reps >= 1", file=sys.stderr)
        return EXIT_USAGE
    for n in args.n_list:
        _check_guard(args, n)
    _chatter(args, f"benchmarking {args.methods} on {args.n_list} "
                   f"(backend: {backend_name()})")
    try:
        report = bench_run(args.n_list, args.methods, repetitions=args.reps,
                           environment=f"backend={backend_name()}")
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    payload = bench_entries_to_csv(report) if args.format == "csv" \
        else to_json(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload if payload.endswith("\n") else payload + "\n")
        _chatter(args, f"report written to {args.output}")
    else:
        print(payload)
    return EXIT_OK if report.agreement else EXIT_MISMATCH


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "pi": cmd_pi,
        "terms": cmd_terms,
        "grid": cmd_grid,
        "verify": cmd_verify,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except OverflowError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
