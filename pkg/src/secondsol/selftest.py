"""Aggregate verification sweep behind ``secondsol selftest``.

Every check is exact and deterministic (fixed RNG seed).  Each returns a
short detail string on success and raises AssertionError on failure.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable

from . import bezout, chg, pqpoly, recurrence, series
from .exactcore import DensePoly, factorial, format_poly, harmonic_range
from .reference import P_TABLES

SEED = 20240229


def _rand_q(rng: random.Random, lo=-9, hi=9, nonzero=False) -> Fraction:
    while True:
        v = Fraction(rng.randint(lo, hi), rng.randint(1, 7))
        if v or not nonzero:
            return v


def _rand_poly(rng: random.Random, deg: int) -> DensePoly:
    return DensePoly([_rand_q(rng) for _ in range(deg + 1)])


def _fib(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def check_tables() -> str:
    for N, rows in P_TABLES.items():
        for n, text in enumerate(rows):
            got = format_poly(chg.p_poly(N, n))
            assert got == text, f"P({N},{n}) = {got}, published {text}"
    return "35 entries"


def check_dalembert() -> str:
    N = 20
    for r in (1, 2, -3, Fraction(1, 2)):
        spec, first = recurrence.double_root(r)
        y2 = recurrence.dalembert_second(spec, recurrence.first_orbit(first, N))
        assert all(y2[n] == (n - 1) * Fraction(r) ** n for n in range(N + 1)), f"double root r={r}"
    spec, first = recurrence.factorial_example()
    y2 = recurrence.dalembert_second(spec, recurrence.first_orbit(first, N))
    for n in range(1, N + 1):
        want = factorial(n) * sum((Fraction((-1) ** (l - 1)) / factorial(l) for l in range(2, n + 1)), Fraction(0))
        assert y2[n] == want, f"factorial example n={n}"
    spec, first = recurrence.harmonic_example()
    y2 = recurrence.dalembert_second(spec, recurrence.first_orbit(first, N))
    for n in range(1, N + 1):
        assert y2[n] == sum((Fraction(1, k + 1) for k in range(1, n)), Fraction(0)), f"harmonic n={n}"
    spec, first = recurrence.ex4_example()
    y2 = recurrence.dalembert_second(spec, recurrence.first_orbit(first, N))
    for n in range(N + 1):
        assert y2[n] == factorial(n + 2) - 3 * 2**n, f"ex4 n={n}"
    return "4 examples, n <= 20"


def check_pq() -> str:
    rng = random.Random(SEED)
    for n in range(21):
        assert len(pqpoly.build_P(n)) == _fib(n + 1), f"|P_{n}|"
        assert len(pqpoly.build_Q(n)) == _fib(n + 1), f"|Q_{n}|"
    for _ in range(100):
        n = rng.randint(0, 12)
        beta = [_rand_q(rng) for _ in range(n + 2)]
        gamma = [_rand_q(rng) for _ in range(n + 2)]
        Y0, Y1 = _rand_q(rng), _rand_q(rng)
        got = pqpoly.assemble_Y(n, Y0, Y1, beta, gamma)
        assert got == pqpoly.matrix_iterate(n, Y0, Y1, beta, gamma), f"assemble_Y n={n}"
        lam = _rand_q(rng, nonzero=True)
        P = pqpoly.build_P(n)
        scaled = pqpoly.evaluate(P, [lam * b for b in beta], [lam * lam * g for g in gamma])
        assert scaled == lam**n * pqpoly.evaluate(P, beta, gamma), "homogeneity"
    return "F_{n+1} counts, 100 random iterations"


def check_casoratians() -> str:
    rng = random.Random(SEED + 1)
    for _ in range(10):
        beta = [_rand_q(rng) for _ in range(14)]
        gamma = [_rand_q(rng, nonzero=True) for _ in range(14)]
        f1, f2 = recurrence.fundamental_pair(beta, gamma, 13)
        for n in range(13):
            assert recurrence.casorati(f1, f2, n) == recurrence.casorati_gamma_product(gamma, n), f"n={n}"
    for N in range(9):
        for n in range(9):
            assert chg.casoratian_check(N, n), f"chg Casoratian N={N} n={n}"
        assert chg.casoratian_poly(0, N) == Fraction(factorial(N), N + 1)
    return "fundamental pair n <= 12; chg N, n <= 8"


def check_resummation() -> str:
    for N in range(13):
        for n in range(13):
            p = chg.ChgParams(N, n)
            for m in range(N):
                assert chg.c_coeff(p, m, "doublesum") == chg.c_coeff(p, m, "harmonic"), f"c({N},{n},{m})"
            if N:
                assert chg.c_coeff(p, N - 1) == (-1) ** N
            P = chg.p_poly(p)
            for m in range(n):
                v = P[m]
                assert v > 0 and v.denominator == 1 and v == chg.low_coeff(p, m), f"low coefficient {N},{n},{m}"
    return "N, n <= 12"


def check_recurrences() -> str:
    for N in range(1, 11):
        for n in range(9):
            assert chg.verify_N_recurrence(N, n, which="phi"), f"phi N={N} n={n}"
            assert chg.verify_N_recurrence(N, n, which="psibar"), f"psibar N={N} n={n}"
    for N in range(9):
        for n in range(1, 9):
            assert chg.verify_b_recurrence(N, n, which="second"), f"second kind N={N} n={n}"
            assert chg.verify_b_recurrence(N, n, which="first"), f"first kind N={N} n={n}"
            assert chg.p_poly(N, n)[0] == chg.p_at_zero(N, n)
    return "N-recurrence N <= 10, b-recurrence N, n <= 8"


def check_bezout() -> str:
    for N in range(2, 11):
        for n in range(11):
            pair = bezout.bezout_phi(N, n)
            assert pair.residual().is_zero(), f"s phi + t phi' != 1 at N={N} n={n}"
            assert pair.s.degree() == N - 2 and pair.t.degree() == N - 1, f"degrees at N={N} n={n}"
            assert bezout.cancellation_identity(pair), f"cancellation at N={N} n={n}"
            fn = bezout.footnote_pair(N, n)
            assert fn.s == pair.s and fn.t == pair.t, f"closed-form pair differs at N={N} n={n}"
    return "2 <= N <= 10, n <= 10"


def check_series() -> str:
    for N in range(6):
        for n in range(6):
            report = series.compare(N, 20, n)
            assert report.equal, f"N={N} n={n}: {report.first_mismatch}"
    return "N, n <= 5, M = 20"


def check_ring_axioms() -> str:
    rng = random.Random(SEED + 2)
    for _ in range(50):
        a, b, c = (_rand_poly(rng, rng.randint(0, 6)) for _ in range(3))
        assert (a + b) + c == a + (b + c) and a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            q, r = a.divrem(b)
            assert b * q + r == a and (r.is_zero() or r.degree() < b.degree())
        if not (a.is_zero() and b.is_zero()):
            s, t, g = bezout.ext_euclid(a, b)
            assert s * a + t * b == g
    for m in range(2, 40):
        assert harmonic_range(1, m) - harmonic_range(1, m - 1) == Fraction(1, m)
    return "50 random triples"


def check_truncation() -> str:
    for N, n in [(0, 1), (2, 3), (4, 0), (3, 5)]:
        hi_dl, hi_pm = series.psi_dl(N, 20, n), series.psi_pm(N, 20, n)
        for M in (0, 3, 11):
            assert series.psi_dl(N, M, n) == hi_dl.truncate(M)
            assert series.psi_pm(N, M, n) == hi_pm.truncate(M)
    return "orders 0, 3, 11 against 20"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("1 golden tables", check_tables),
    ("2 d'Alembert examples", check_dalembert),
    ("3 P/Q construction", check_pq),
    ("4 Casoratians", check_casoratians),
    ("5 coefficient resummation", check_resummation),
    ("6 recurrences", check_recurrences),
    ("7 Bezout pair and cancellation", check_bezout),
    ("8 series comparison", check_series),
    ("9a ring axioms", check_ring_axioms),
    ("9b truncation stability", check_truncation),
]


def run(echo: Callable[[str], None] = print) -> bool:
    all_ok = True
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            detail = fn()
            ok = True
        except AssertionError as exc:
            detail, ok = f"FAILED: {exc}", False
        all_ok &= ok
        echo(f"{'PASS' if ok else 'FAIL'}  {name:<32} {time.perf_counter() - t0:6.2f}s  {detail}")
    return all_ok
