#!/usr/bin/env python3
"""Run every theorem sweep over a grid of (n, t, alpha) and write one JSON file.

    python scripts/sweep.py --max-n 9 --alphas 0 0.5 1 --out sweeps.json

Set CONE_SPECTRA_THREADS to fan instances out to worker processes.
"""

import argparse
import json
import time

from cone_spectra import __version__
from cone_spectra.report import _plain
from cone_spectra.verify import MAJORIZATION, THEOREMS, UNIQUENESS, verify_theorem


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--max-t", type=int, default=2)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.0, 0.5, 1.0])
    ap.add_argument("--ids", nargs="+", choices=THEOREMS, default=list(THEOREMS))
    ap.add_argument("--oracle-limit", type=int, default=9)
    ap.add_argument("--out", default="sweeps.json")
    args = ap.parse_args()

    runs = []
    for key in args.ids:
        c, offset = {**UNIQUENESS, **MAJORIZATION}[key]
        for n in range(c + 3, args.max_n + 1):
            for t in range(0, min(args.max_t, n - offset) + 1):
                for alpha in args.alphas:
                    start = time.perf_counter()
                    sweep = verify_theorem(key, n, t, alpha, args.oracle_limit)
                    took = time.perf_counter() - start
                    print(f"{key} n={n} t={t} alpha={alpha}: {sweep.verdict.value} "
                          f"({len(sweep.reports)} instances, min margin "
                          f"{sweep.min_margin:.3e}, {took:.1f}s)", flush=True)
                    runs.append(sweep.to_json())
    with open(args.out, "w") as fh:
        json.dump(_plain({"version": __version__, "runs": runs}), fh, indent=1, sort_keys=True)


if __name__ == "__main__":
    main()
