"""Compare the closed-form 3F2 Bezout pair with the extended-Euclid pair and print any disagreement verbatim."""
import argparse
import json
import sys

from secondsol import bezout
from secondsol.exactcore import format_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=12)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--json", action="store_true", help="dump every report as JSON lines")
    args = ap.parse_args()

    mismatches = 0
    for N in range(2, args.N + 1):
        for n in range(args.n + 1):
            report = bezout.bezout_report(N, n)
            if args.json:
                print(json.dumps(report))
            if not report["closed_form_matches"]:
                mismatches += 1
                fn = bezout.footnote_pair(N, n)
                pair = bezout.bezout_phi(N, n)
                print(f"N={N} n={n}")
                print(f"  euclid      s = {format_poly(pair.s)}   t = {format_poly(pair.t)}")
                print(f"  closed form s = {format_poly(fn.s)}   t = {format_poly(fn.t)}")
    total = (args.N - 1) * (args.n + 1)
    print(f"{total} pairs compared, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
