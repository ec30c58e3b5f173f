"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails (the mismatch is
printed), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bezout, chg, pqpoly, recurrence, selftest, series
from .exactcore import format_poly, format_rational, poly_to_json, rational_to_json


class CommandFailed(Exception):
    pass


def _parse_rationals(text: str) -> list[Fraction]:
    return [Fraction(tok.strip()) for tok in text.split(",") if tok.strip()]


def parse_coeffs(text: str) -> recurrence.RecurrenceSpec:
    """``a=1,1;b=-3,-2;c=1,1``: ascending coefficients in n for each of a, b, c."""
    parts = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, _, vals = chunk.partition("=")
        key = key.strip()
        if key not in ("a", "b", "c") or not _:
            raise ValueError(f"bad coefficient chunk {chunk!r}")
        parts[key] = _parse_rationals(vals) or [Fraction(0)]
    missing = {"a", "b", "c"} - set(parts)
    if missing:
        raise ValueError(f"missing coefficient(s) {sorted(missing)}")
    return recurrence.RecurrenceSpec.from_polys(parts["a"], parts["b"], parts["c"])


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _need(args, parser, *names):
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"--{name} is required unless --all is given")


# -- subcommands -------------------------------------------------------------

def cmd_dalembert(args, parser):
    if (args.example is None) == (args.coeffs is None):
        parser.error("give exactly one of --example or --coeffs")
    N = args.upto
    if args.example is not None:
        factory = recurrence.EXAMPLES[args.example]
        spec, first = factory(Fraction(args.root)) if args.example == "double-root" else factory()
        f = recurrence.first_orbit(first, N)
        name = args.example
    else:
        try:
            spec = parse_coeffs(args.coeffs)
            y0, y1 = _parse_rationals(args.seeds)
        except ValueError as exc:
            parser.error(str(exc))
        f = recurrence.iterate(spec, y0, y1, N)
        name = "custom"
    y2 = recurrence.dalembert_second(spec, f, N)
    y_form = recurrence.verify_Y_form(spec, y2)
    solves = spec.is_solution(y2.values)
    payload = {
        "example": name,
        "upto": N,
        "first": [rational_to_json(v) for v in f],
        "second": [rational_to_json(v) for v in y2],
        "second_is_solution": solves,
        "y_form_holds": y_form,
    }
    width = max(len(format_rational(v)) for v in f)
    lines = [f"example: {name}", f"{'n':>3}  {'f_n':>{width}}  y2_n"]
    lines += [f"{n:>3}  {format_rational(a):>{width}}  {format_rational(b)}" for n, (a, b) in enumerate(zip(f, y2))]
    lines += [f"second solution satisfies recurrence: {'yes' if solves else 'NO'}",
              f"Y-form recurrence holds: {'yes' if y_form else 'NO'}"]
    _emit(args, payload, "\n".join(lines))
    if not (solves and y_form):
        raise CommandFailed("second solution failed verification")


def cmd_pq(args, parser):
    n = args.n
    if n is None:
        parser.error("--n is required")
    P = pqpoly.build_P(n)
    Qn = pqpoly.build_Q(n - 1) if n >= 1 else None
    payload = {"n": n, "P": P.word_strings(), "Q": Qn.word_strings() if Qn else None,
               "P_terms": len(P), "Q_terms": len(Qn) if Qn else 0}
    lines = [f"P_{n} ({len(P)} terms) = {P.render()}"]
    if Qn is not None:
        lines.append(f"Q_{n - 1} ({len(Qn)} terms) = {Qn.render()}")
        lines.append(f"Y_{n + 1} = (P_{n}) Y_1 + g(-1,0) (Q_{n - 1}) Y_0")
    else:
        lines.append("Y_1 = Y_1")
    _emit(args, payload, "\n".join(lines))


def render_table(N: int, rows=range(7)) -> str:
    """One published table: header ``n  N=k``, then ``<n>  <P(N,n,x)>`` per row."""
    lines = [f"n  N={N}"] + [f"{n}  {format_poly(chg.p_poly(N, n))}" for n in rows]
    return "\n".join(lines)


def cmd_chg_table(args, parser):
    if args.all:
        payload = [{"N": N, "n": n, "P": poly_to_json(chg.p_poly(N, n)), "text": format_poly(chg.p_poly(N, n))}
                   for N in range(5) for n in range(7)]
        _emit(args, payload, "\n\n".join(render_table(N) for N in range(5)))
        return
    _need(args, parser, "N", "n")
    P = chg.p_poly(args.N, args.n)
    _emit(args, {"N": args.N, "n": args.n, "P": poly_to_json(P), "text": format_poly(P)}, format_poly(P))


def chg_checks(N: int, n: int) -> dict[str, bool]:
    out = {"methods_agree": chg.p_poly(N, n) == chg.p_poly(N, n, method="direct"),
           "casoratian": chg.casoratian_check(N, n)}
    if N >= 1:
        out["N_recurrence_phi"] = chg.verify_N_recurrence(N, n, which="phi")
        out["N_recurrence_psibar"] = chg.verify_N_recurrence(N, n, which="psibar")
        out["c_coeff_methods_agree"] = all(
            chg.c_coeff(chg.ChgParams(N, n), m, "doublesum") == chg.c_coeff(chg.ChgParams(N, n), m) for m in range(N))
    if n >= 1:
        out["b_recurrence_first"] = chg.verify_b_recurrence(N, n, which="first")
        out["b_recurrence_second"] = chg.verify_b_recurrence(N, n, which="second")
        out["P_at_zero"] = chg.p_poly(N, n)[0] == chg.p_at_zero(N, n)
    return out


def cmd_chg_verify(args, parser):
    if args.all:
        pairs = [(N, n) for N in range(11) for n in range(9)]
    else:
        _need(args, parser, "N", "n")
        pairs = [(args.N, args.n)]
    results = [{"N": N, "n": n, "checks": chg_checks(N, n)} for N, n in pairs]
    failed = [(r["N"], r["n"], k) for r in results for k, ok in r["checks"].items() if not ok]
    lines = []
    for r in results:
        marks = " ".join(f"{k}={'ok' if ok else 'FAIL'}" for k, ok in r["checks"].items())
        lines.append(f"N={r['N']} n={r['n']}: {marks}")
    C = chg.casoratian_closed(*pairs[-1])
    lines.append(f"C(N+1) at N={pairs[-1][0]}, n={pairs[-1][1]}: {format_rational(C)}")
    _emit(args, {"results": results, "all_passed": not failed}, "\n".join(lines))
    if failed:
        raise CommandFailed(f"failed checks: {failed}")


def cmd_bezout(args, parser):
    _need(args, parser, "N", "n")
    try:
        report = bezout.bezout_report(args.N, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    pair = bezout.bezout_phi(args.N, args.n)
    lines = [
        f"phi  = {format_poly(chg.phi(args.N, args.n))}",
        f"s    = {format_poly(pair.s)}   (degree {report['degree_s']})",
        f"t    = {format_poly(pair.t)}   (degree {report['degree_t']})",
        f"c    = {format_rational(bezout.cancellation_constant(args.N, args.n))}",
        f"x t' - (n+1-x) t + x s = c phi: {'holds' if report['identity_holds'] else 'FAILS'}",
    ]
    if "closed_form_matches" in report:
        lines.append(f"closed-form pair matches: {'yes' if report['closed_form_matches'] else 'NO'}")
    _emit(args, report, "\n".join(lines))
    if not report["identity_holds"] or not report.get("closed_form_matches", True):
        raise CommandFailed("Bezout verification failed")


def _channel_table(name: str, lhs: dict, rhs: dict) -> list[str]:
    rows = [(str(e), format_rational(lhs.get(e, Fraction(0))), format_rational(rhs.get(e, Fraction(0))))
            for e in sorted(set(lhs) | set(rhs))]
    head = ("x^k", "psi_pm", "psi_dl")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(3)]
    out = [f"[{name}]", "  ".join(h.rjust(w) for h, w in zip(head, widths))]
    out += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return out


def cmd_series_compare(args, parser):
    M = args.order
    if args.all:
        reports = [series.compare(N, M, n) for N in range(6) for n in range(6)]
        payload = [r.to_json(expansions=False) for r in reports]
        lines = [f"N={r.params.N} n={r.params.n} M={M}: {'equal' if r.equal else f'MISMATCH {r.first_mismatch}'}"
                 for r in reports]
    else:
        _need(args, parser, "N", "n")
        reports = [series.compare(args.N, M, args.n)]
        r = reports[0]
        payload = r.to_json()
        lines = [f"N={args.N} n={args.n} order={M}  normalization: {r.normalization}"]
        for name in ("pole", "log", "gamma", "rational"):
            lines += _channel_table(name, getattr(r.lhs, name), getattr(r.rhs, name))
        lines.append("equal" if r.equal else f"MISMATCH at {r.first_mismatch}")
    _emit(args, payload, "\n".join(lines))
    bad = [r for r in reports if not r.equal]
    if bad:
        raise CommandFailed(f"{len(bad)} expansion(s) differ")


def cmd_selftest(args, parser):
    if not selftest.run():
        raise CommandFailed("selftest failed")


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="secondsol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dalembert", parents=[common], help="reduction-of-order second solution")
    p.add_argument("--example", choices=sorted(recurrence.EXAMPLES))
    p.add_argument("--coeffs", help="a=..;b=..;c=.. ascending coefficients in n")
    p.add_argument("--seeds", default="1,1", help="y0,y1 for --coeffs (default 1,1)")
    p.add_argument("--root", default="2", help="root r for the double-root example (default 2)")
    p.add_argument("--upto", type=int, default=10)
    p.set_defaults(func=cmd_dalembert)

    p = sub.add_parser("pq", parents=[common], help="P_n and Q_{n-1} word sets")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_pq)

    for name, func, help_ in [
        ("chg-table", cmd_chg_table, "second-kind polynomials P(N, n, x)"),
        ("chg-verify", cmd_chg_verify, "recurrence and Casoratian identities"),
        ("bezout", cmd_bezout, "Bezout pair for (phi, phi')"),
        ("series-compare", cmd_series_compare, "compare the two Laurent-log expansions"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--N", type=int)
        p.add_argument("--n", type=int)
        if name != "bezout":
            p.add_argument("--all", action="store_true")
        if name == "series-compare":
            p.add_argument("--order", type=int, default=20)
        p.set_defaults(func=func)

    p = sub.add_parser("selftest", parents=[common], help="run every verification sweep")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("N", "n", "upto", "order"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            parser.error(f"--{name} must be nonnegative")
    try:
        args.func(args, parser)
    except CommandFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except recurrence.RecurrenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
