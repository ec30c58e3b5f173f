"""Bezout pairs over Q[x] and the square-free step for 1/phi^2.

For phi = 1F1(-N; n+1; x) the minimal pair with s phi + t phi' = 1 makes

    x t' - (n+1-x) t + x s = c phi,    c = (n+1) (N+n)!/(n! N!),

which is what lets the reduction-of-order integral collapse to Ei.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chg import ChgParams, _params, phi
from .exactcore import DensePoly, factorial, pochhammer, poly_to_json, rational_to_json

X = DensePoly.x()


def ext_euclid(A: DensePoly, B: DensePoly) -> tuple[DensePoly, DensePoly, DensePoly]:
    """Return (s, t, g) with s A + t B = g, g the monic gcd.

    s is reduced modulo B/g.  When both cofactors A/g and B/g are
    nonconstant this gives the unique pair with deg s < deg B - deg g and
    deg t < deg A - deg g (if either cofactor is constant no pair can meet
    both bounds).
    """
    if A.is_zero() and B.is_zero():
        raise ZeroDivisionError("gcd of two zero polynomials is undefined")
    r0, r1 = A, B
    s0, s1 = DensePoly.constant(1), DensePoly()
    t0, t1 = DensePoly(), DensePoly.constant(1)
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading_coefficient()
    g, s, t = r0 * (1 / lc), s0 * (1 / lc), t0 * (1 / lc)
    if not B.is_zero() and B.degree() > g.degree():
        cofactor = B // g
        s = s % cofactor
        t = (g - s * A) // B
    assert s * A + t * B == g
    return s, t, g


@dataclass(frozen=True)
class BezoutPair:
    s: DensePoly
    t: DensePoly
    params: ChgParams

    def residual(self) -> DensePoly:
        f = phi(self.params)
        return self.s * f + self.t * f.derivative() - 1

    def to_json(self) -> dict:
        return {"s": poly_to_json(self.s), "t": poly_to_json(self.t)}


def bezout_phi(p: ChgParams | int, n: int | None = None) -> BezoutPair:
    p = _params(p, n)
    if p.N == 0:
        raise ValueError("phi is constant for N = 0, so phi and phi' are not coprime")
    f = phi(p)
    s, t, g = ext_euclid(f, f.derivative())
    if g != DensePoly.constant(1):
        raise ArithmeticError(f"phi and phi' share a factor at {p}: gcd = {g}")
    return BezoutPair(s, t, p)


def hyp3f2_bezout(N: int, n: int, p: int) -> Fraction:
    """3F2([-N+p+1, p, 1], [n+2+p, -N+1]; 1), summed until (-N+p+1)_j vanishes."""
    total = Fraction(0)
    for j in range(max(N - p, 0) + 1):
        num = pochhammer(-N + p + 1, j) * pochhammer(p, j) * pochhammer(1, j)
        if not num:
            break
        den = pochhammer(n + 2 + p, j) * pochhammer(-N + 1, j) * factorial(j)
        total += num / den
    return total


def footnote_pair(p: ChgParams | int, n: int | None = None) -> BezoutPair:
    """s and t from the closed-form terminating sums (N >= 2)."""
    p = _params(p, n)
    N, n = p.N, p.n
    if N < 2:
        raise ValueError("closed-form Bezout sums need N >= 2")
    s_coeffs = {0: 1 - factorial(N + n) / (factorial(N - 1) * factorial(n + 1))}
    pref = factorial(N + n) / (factorial(N - 1) * factorial(n))
    for k in range(1, N - 1):
        ratio = pochhammer(-N + 1, k) / pochhammer(n + 2, k)
        s_coeffs[k] = pref * ratio * (1 - hyp3f2_bezout(N, n, k)) / (k * factorial(k))
    t_coeffs = {}
    pref_t = -factorial(N + n) / (factorial(N) * factorial(n))
    for k in range(N):
        ratio = pochhammer(-N + 1, k) / pochhammer(n + 2, k)
        t_coeffs[k] = pref_t * ratio * hyp3f2_bezout(N, n, k) / factorial(k)
    return BezoutPair(DensePoly(s_coeffs), DensePoly(t_coeffs), p)


def cancellation_constant(p: ChgParams | int, n: int | None = None) -> Fraction:
    p = _params(p, n)
    return (p.n + 1) * factorial(p.n + p.N) / (factorial(p.n) * factorial(p.N))


def cancellation_residual(pair: BezoutPair) -> DensePoly:
    """x t' - (n+1-x) t + x s - c phi (x times t' - p t + s - c phi/x)."""
    p = pair.params
    t, s = pair.t, pair.s
    return X * t.derivative() - ((p.n + 1) - X) * t + X * s - cancellation_constant(p) * phi(p)


def cancellation_identity(p: ChgParams | int | BezoutPair, n: int | None = None) -> bool:
    pair = p if isinstance(p, BezoutPair) else bezout_phi(p, n)
    return cancellation_residual(pair).is_zero()


def bezout_report(p: ChgParams | int, n: int | None = None) -> dict:
    p = _params(p, n)
    pair = bezout_phi(p)
    report = {
        "params": {"N": p.N, "n": p.n},
        **pair.to_json(),
        "degree_s": None if pair.s.is_zero() else pair.s.degree(),
        "degree_t": None if pair.t.is_zero() else pair.t.degree(),
        "identity_holds": cancellation_identity(pair),
        "c": rational_to_json(cancellation_constant(p)),
    }
    if p.N >= 2:
        fn = footnote_pair(p)
        report["closed_form_matches"] = fn.s == pair.s and fn.t == pair.t
        if not report["closed_form_matches"]:
            report["closed_form"] = fn.to_json()
    return report
