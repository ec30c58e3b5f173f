"""Print P(N, n, x) for a block of (N, n) and diff the first five tables against the published rows.

    python scripts/reproduce_tables.py            # N = 0..4, n = 0..6
    python scripts/reproduce_tables.py --N 7 --n 9
"""
import argparse
import sys

from secondsol.cli import render_table
from secondsol.reference import P_TABLES


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=4, help="largest N (default 4)")
    ap.add_argument("--n", type=int, default=6, help="largest n (default 6)")
    args = ap.parse_args()

    bad = 0
    for N in range(args.N + 1):
        text = render_table(N, rows=range(args.n + 1))
        print(text, end="\n\n")
        rows = text.splitlines()[1:]
        for n, row in enumerate(rows):
            published = P_TABLES.get(N)
            if published and n < len(published) and row.split("  ", 1)[1] != published[n]:
                print(f"  differs from published row: {published[n]}")
                bad += 1
    checked = sum(min(len(P_TABLES[N]), args.n + 1) for N in P_TABLES if N <= args.N)
    print(f"{checked} published entries compared, {bad} differences")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
