#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Times the pruned walks (literal and collapse), the naive walk and the
set-model inclusion-exclusion on both backends and prints a table plus an
optional JSON report.  Result values are cross-checked between backends;
a disagreement aborts the run.
"""

import argparse
import json
import sys
import time

from picount.backend import kernel_by_name

KERNEL_FUNCS = ("pruned_literal", "pruned_collapse", "naive_full", "set_model_ie")


def best_of(fn, n, reps):
    best = None
    result = None
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn(n)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-list", default="400,2000,20000",
                        help="comma-separated n values")
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--naive-max", type=int, default=675,
                        help="skip the naive walk above this n")
    parser.add_argument("--literal-max", type=int, default=4096,
                        help="skip the literal walk / set model above this n")
    parser.add_argument("--output", default=None, help="also write JSON here")
    args = parser.parse_args()
    n_values = [int(t) for t in args.n_list.split(",") if t.strip()]

    backends = {}
    for name in ("c", "python"):
        try:
            backends[name] = kernel_by_name(name)
        except ImportError:
            print(f"backend {name!r} unavailable, skipping", file=sys.stderr)
    if not backends:
        sys.exit("no backend available")

    rows = []
    for n in n_values:
        for func in KERNEL_FUNCS:
            if func == "naive_full" and n > args.naive_max:
                continue
            if func in ("pruned_literal", "set_model_ie") and n > args.literal_max:
                continue
            results = {}
            for name, kern in backends.items():
                result, elapsed = best_of(getattr(kern, func), n, args.reps)
                results[name] = (result[0], elapsed)
                rows.append({"n": n, "kernel": func, "backend": name,
                             "value": result[0], "elapsed": elapsed})
            values = {v for v, _ in results.values()}
            if len(values) > 1:
                sys.exit(f"backend disagreement for {func}({n}): {results}")

    width = max(len(f) for f in KERNEL_FUNCS)
    print(f"{'n':>8}  {'kernel':<{width}}  {'backend':<7}  {'seconds':>10}  speedup")
    by_key = {}
    for row in rows:
        by_key[(row["n"], row["kernel"], row["backend"])] = row["elapsed"]
    for row in rows:
        base = by_key.get((row["n"], row["kernel"], "python"))
        speedup = f"{base / row['elapsed']:8.1f}x" if base and row["backend"] == "c" \
            else "        -"
        print(f"{row['n']:>8}  {row['kernel']:<{width}}  {row['backend']:<7}  "
              f"{row['elapsed']:>10.6f}  {speedup}")

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump({"kind": "backend-bench", "version": 1, "rows": rows},
                      fh, indent=2, sort_keys=True)
        print(f"JSON written to {args.output}")


if __name__ == "__main__":
    main()
