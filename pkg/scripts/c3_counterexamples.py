#!/usr/bin/env python3
"""Look for star pairs of 3-cyclic cones where the maximal Theta goes down."""

import argparse

from cone_spectra.enumeration import counterexample_search
from cone_spectra.report import Verdict


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[6, 7, 8, 9])
    ap.add_argument("--t", type=int, default=0)
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.0, 0.5, 1.0])
    args = ap.parse_args()

    for n in args.n:
        for alpha in args.alphas:
            reps = counterexample_search(n, args.t, args.c, alpha)
            bad = [r for r in reps if r.verdict is Verdict.VIOLATED]
            print(f"n={n} t={args.t} c={args.c} alpha={alpha}: {len(bad)} decreasing pairs")
            for r in bad[:5]:
                w = r.witnesses
                print(f"   {tuple(r.params['pi'])} -> {tuple(r.params['pi_prime'])}: "
                      f"{w['theta_pi']:.9f} > {w['theta_pi_prime']:.9f}")


if __name__ == "__main__":
    main()
