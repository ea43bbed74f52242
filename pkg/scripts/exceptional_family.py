#!/usr/bin/env python3
"""Tabulate Theta on both ends of each excluded bicyclic star pair, across alpha.

The majorization result for bicyclic cones leaves one family of star pairs
open; this prints the measured gap Theta(G_pi') - Theta(G_pi) for each.
"""

import argparse

import numpy as np

from cone_spectra.construct import maximal_for
from cone_spectra.degseq import exceptional_family
from cone_spectra.spectral import theta


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--max-t", type=int, default=3)
    ap.add_argument("--alpha-steps", type=int, default=21)
    args = ap.parse_args()

    grid = np.linspace(0.0, 2.0, args.alpha_steps)
    worst = None
    print("n t pi -> pi_prime : min gap over alpha (at alpha)")
    for n in range(6, args.max_n + 1):
        for t in range(0, args.max_t + 1):
            if n - t < 6:
                continue
            for a, b in exceptional_family(n, t):
                ga, gb = maximal_for(a, t, 2).full, maximal_for(b, t, 2).full
                gaps = [theta(gb, al).theta - theta(ga, al).theta for al in grid]
                i = int(np.argmin(gaps))
                print(f"{n} {t} {a} -> {b} : {gaps[i]:+.6e} ({grid[i]:.2f})")
                if worst is None or gaps[i] < worst[0]:
                    worst = (gaps[i], n, t, a, b, float(grid[i]))
    if worst is not None:
        print("smallest gap:", worst)


if __name__ == "__main__":
    main()
