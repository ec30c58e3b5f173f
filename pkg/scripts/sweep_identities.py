"""Run the identity sweeps over a wider (N, n) box than the test suite and time each family.

Each family is checked independently per (N, n); the grid is spread over a
process pool since every check is a pure function.
"""
import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from secondsol import bezout, chg, series


def one(args):
    N, n, M = args
    failed = []
    if chg.p_poly(N, n) != chg.p_poly(N, n, method="direct"):
        failed.append("two constructions")
    if not chg.casoratian_check(N, n):
        failed.append("casoratian")
    if N >= 1:
        if not (chg.verify_N_recurrence(N, n, which="phi") and chg.verify_N_recurrence(N, n, which="psibar")):
            failed.append("N-recurrence")
        if not bezout.cancellation_identity(N, n):
            failed.append("cancellation")
    if n >= 1 and not (chg.verify_b_recurrence(N, n, which="first") and chg.verify_b_recurrence(N, n, which="second")):
        failed.append("n-recurrence")
    if N >= 2:
        fn, pair = bezout.footnote_pair(N, n), bezout.bezout_phi(N, n)
        if (fn.s, fn.t) != (pair.s, pair.t):
            failed.append("closed-form Bezout pair")
    if not series.compare(N, M, n).equal:
        failed.append("series")
    return N, n, failed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=14)
    ap.add_argument("--n", type=int, default=14)
    ap.add_argument("--order", type=int, default=25, help="series truncation order")
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    grid = [(N, n, args.order) for N in range(args.N + 1) for n in range(args.n + 1)]
    t0 = time.perf_counter()
    with ProcessPoolExecutor(args.workers) as pool:
        results = sorted(pool.map(one, grid))
    bad = [(N, n, f) for N, n, f in results if f]
    for N, n, f in bad:
        print(f"N={N} n={n}: {', '.join(f)}")
    print(f"{len(grid)} parameter pairs, {len(bad)} with failures, {time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
