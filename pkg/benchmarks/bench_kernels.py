"""Timing comparison of the compiled counting kernel and its pure fallback.

Runs the same standard-growth enumeration over every (shape, word) pair of a
few blocks, once through the accelerated kernel and once through the plain
Python implementation, and prints the wall-clock ratio.

    python3 benchmarks/bench_kernels.py [--repeat N]

Set HECKEBLOCKS_NO_NUMBA=1 to confirm both columns then time the same code.
"""

import argparse
import time

import numpy as np

from heckeblocks import AffineRank, FockContext, block_bipartitions, null_root
from heckeblocks import residue_sequences
from heckeblocks._kernels import kostka_counts, kostka_counts_python, using_numba


def workload(ell, s, delta_multiple):
    rank = AffineRank(ell)
    ctx = FockContext(rank, s, level=2)
    beta = delta_multiple * null_root(rank)
    shapes = block_bipartitions(ctx, beta)
    words = residue_sequences(ctx, beta)
    jobs = []
    for shape in shapes:
        t1 = np.asarray(shape.comp1, np.int64)
        t2 = np.asarray(shape.comp2, np.int64)
        for word in words:
            nu = np.asarray(word, np.int64)
            jobs.append((t1, t2, nu))
    return ctx, beta, jobs


def run(fn, jobs, e, shift, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for t1, t2, nu in jobs:
            bound = nu.shape[0] * (t1.shape[0] + t2.shape[0] + 2) + 1
            counts = np.zeros(2 * bound + 1, np.int64)
            fn(t1, t2, nu, e, shift, counts, bound)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = parser.parse_args()

    cases = [(1, 1, 3), (2, 1, 2), (3, 2, 2)]
    print(f"accelerated kernel active: {using_numba}")
    header = f"{'block':>18} {'jobs':>6} {'fast (s)':>10} {'pure (s)':>10} {'ratio':>7}"
    print(header)
    print("-" * len(header))
    for ell, s, mult in cases:
        ctx, beta, jobs = workload(ell, s, mult)
        e, shift = ctx.rank.e, ctx.s
        # throwaway pass so compilation is not charged to the first row
        run(kostka_counts, jobs[:1], e, shift, 1)
        fast = run(kostka_counts, jobs, e, shift, args.repeat)
        pure = run(kostka_counts_python, jobs, e, shift, args.repeat)
        label = f"ell={ell} s={s} {mult}*delta"
        ratio = pure / fast if fast > 0 else float("inf")
        print(f"{label:>18} {len(jobs):>6} {fast:>10.4f} {pure:>10.4f} {ratio:>6.1f}x")


if __name__ == "__main__":
    main()
