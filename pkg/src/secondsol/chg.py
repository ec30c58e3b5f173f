"""Degenerate confluent hypergeometric case a = -N, b = n + 1.

phi(N, n) is the terminating 1F1(-N; n+1; x).  p_poly(N, n) is the integer
polynomial P(N, n, x) of the second solution, normalised so that the
x^(N+n-1) coefficient is (-1)^N, and psibar = n!/(N+n)! * P.  Both obey

    (N+n+1) F(N+1) - (2N+n+1-x) F(N) + N F(N-1) = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactcore import DensePoly, binomial, factorial, harmonic_range, pochhammer

X = DensePoly.x()


@dataclass(frozen=True)
class ChgParams:
    N: int
    n: int

    def __post_init__(self):
        if self.N < 0 or self.n < 0:
            raise ValueError(f"need N >= 0 and n >= 0, got N={self.N}, n={self.n}")


def _params(p, n=None) -> ChgParams:
    if isinstance(p, ChgParams):
        return p
    return ChgParams(p, n)


@lru_cache(maxsize=None)
def _phi(N: int, n: int) -> DensePoly:
    return DensePoly({k: pochhammer(-N, k) / (pochhammer(n + 1, k) * factorial(k)) for k in range(N + 1)})


def phi(p: ChgParams | int, n: int | None = None) -> DensePoly:
    """1F1(-N; n+1; x) = sum_k (-N)_k / ((n+1)_k k!) x^k."""
    p = _params(p, n)
    return _phi(p.N, p.n)


# -- coefficients of x^(n+m) ------------------------------------------------

def _check_m(p: ChgParams, m: int):
    if not 0 <= m <= p.N - 1:
        raise ValueError(f"m must lie in [0, {p.N - 1}] for N={p.N}, got {m}")


def c_coeff_doublesum(p: ChgParams, m: int) -> Fraction:
    N, n = p.N, p.n
    _check_m(p, m)
    total = Fraction(0)
    for k in range(N - m):
        total += (
            (-1) ** k
            * factorial(N) / factorial(N - k - m - 1)
            * factorial(N + n) / factorial(n + k + m + 1)
            * factorial(k) / factorial(k + m + 1)
        )
    return (-1) ** (m + 1) * total


def c_coeff_harmonic(p: ChgParams, m: int) -> Fraction:
    N, n = p.N, p.n
    _check_m(p, m)
    total = sum(
        (pochhammer(N + n + 1 - k, m) / k for k in range(n + m + 1, N + n + 1)),
        Fraction(0),
    )
    return (-1) ** (m + 1) * factorial(n + N) / (factorial(n + m) * factorial(m)) * total


def c_coeff(p: ChgParams, m: int, method: str = "harmonic") -> Fraction:
    """Coefficient of x^(n+m) in P(N, n, x), 0 <= m <= N-1."""
    if method == "harmonic":
        return c_coeff_harmonic(p, m)
    if method == "doublesum":
        return c_coeff_doublesum(p, m)
    raise ValueError(f"unknown method {method!r}")


def c_coeff_m0(p: ChgParams) -> Fraction:
    """-(n+N)!/n! * sum_{k=n+1}^{N+n} 1/k."""
    return -factorial(p.n + p.N) / factorial(p.n) * harmonic_range(p.n + 1, p.N + p.n)


def low_coeff(p: ChgParams, m: int) -> Fraction:
    """Coefficient of x^m for m < n: (N+m)!(n-m-1)!/m!."""
    return factorial(p.N + m) * factorial(p.n - m - 1) / factorial(m)


# -- P(N, n, x) -------------------------------------------------------------

@lru_cache(maxsize=None)
def _p_resummed(N: int, n: int) -> DensePoly:
    p = ChgParams(N, n)
    coeffs = {m: low_coeff(p, m) for m in range(n)}
    for m in range(N):
        coeffs[n + m] = c_coeff_harmonic(p, m)
    return DensePoly(coeffs)


@lru_cache(maxsize=None)
def _p_direct(N: int, n: int) -> DensePoly:
    coeffs: dict[int, Fraction] = {}
    for k in range(N + 1):
        w = pochhammer(-N, k) / (pochhammer(n + 1, k) * factorial(k))
        if not w:
            continue
        for m in range(n + k):
            coeffs[m] = coeffs.get(m, 0) + w * factorial(n + k - 1 - m)
    scale = factorial(N + n) / factorial(n)
    return DensePoly(coeffs) * scale


def p_poly(p: ChgParams | int, n: int | None = None, method: str = "resummed") -> DensePoly:
    """P(N, n, x), via the resummed harmonic coefficients or the direct double sum."""
    p = _params(p, n)
    if method == "resummed":
        return _p_resummed(p.N, p.n)
    if method == "direct":
        return _p_direct(p.N, p.n)
    raise ValueError(f"unknown method {method!r}")


def psibar(p: ChgParams | int, n: int | None = None) -> DensePoly:
    p = _params(p, n)
    return p_poly(p) * (factorial(p.n) / factorial(p.N + p.n))


def gauss_2f1_terminating(N: int, n: int, m: int) -> Fraction:
    """sum_k (-N)_k (n-m)_k / ((n+1)_k k!), the 2F1 at unit argument, summed termwise."""
    return sum(
        (pochhammer(-N, k) * pochhammer(n - m, k) / (pochhammer(n + 1, k) * factorial(k)) for k in range(N + 1)),
        Fraction(0),
    )


def gauss_2f1_closed(N: int, n: int, m: int) -> Fraction:
    return factorial(n) * factorial(N + m) / (factorial(N + n) * factorial(m))


# -- identities -------------------------------------------------------------

Family = Callable[[int, int], DensePoly]

FAMILIES: dict[str, Family] = {
    "phi": lambda N, n: phi(N, n),
    "psibar": lambda N, n: psibar(N, n),
}


def n_recurrence_residual(family: Family, N: int, n: int) -> DensePoly:
    """(N+n+1) F(N+1) - (2N+n+1-x) F(N) + N F(N-1)."""
    if N < 1:
        raise ValueError("the recurrence in N needs N >= 1")
    return (N + n + 1) * family(N + 1, n) - ((2 * N + n + 1) - X) * family(N, n) + N * family(N - 1, n)


def verify_N_recurrence(p: ChgParams | int, n: int | None = None, which: str | Family = "phi") -> bool:
    p = _params(p, n)
    family = FAMILIES[which] if isinstance(which, str) else which
    return n_recurrence_residual(family, p.N, p.n).is_zero()


def second_kind_cleared(N: int, n: int) -> DensePoly:
    """x^n times the second-kind Laguerre function: n!/(N+n)! P(N, n, x)."""
    return psibar(N, n)


def b_recurrence_residual(N: int, n: int, which: str = "first") -> DensePoly:
    """n(n+1) F^(n-1) - (n+1)(n+x) F^(n) + x(n+1+N) F^(n+1), polynomial form.

    For the second kind, F^(k) = x^-k psibar(N, k) and the identity is
    multiplied through by x^(n+1).
    """
    if n < 1:
        raise ValueError("the recurrence in n needs n >= 1")
    if which == "first":
        lo, mid, hi = phi(N, n - 1), phi(N, n), phi(N, n + 1)
        return n * (n + 1) * lo - (n + 1) * (n + X) * mid + (n + 1 + N) * X * hi
    if which == "second":
        lo, mid, hi = psibar(N, n - 1), psibar(N, n), psibar(N, n + 1)
        return n * (n + 1) * lo.shift(2) - (n + 1) * (n + X) * mid.shift(1) + (n + 1 + N) * X * hi
    raise ValueError(f"unknown kind {which!r}")


def verify_b_recurrence(p: ChgParams | int, n: int | None = None, which: str = "first") -> bool:
    p = _params(p, n)
    return b_recurrence_residual(p.N, p.n, which).is_zero()


def casoratian_poly(p: ChgParams | int, n: int | None = None) -> DensePoly:
    """C(N+1) = phi(N+1) psibar(N) - psibar(N+1) phi(N) as a polynomial in x."""
    p = _params(p, n)
    N, n = p.N, p.n
    return phi(N + 1, n) * psibar(N, n) - psibar(N + 1, n) * phi(N, n)


def casoratian_closed(p: ChgParams | int, n: int | None = None) -> Fraction:
    """N! (n!)^2 / (N+n+1)!."""
    p = _params(p, n)
    return factorial(p.N) * factorial(p.n) ** 2 / factorial(p.N + p.n + 1)


def casoratian_check(p: ChgParams | int, n: int | None = None) -> bool:
    p = _params(p, n)
    C = casoratian_poly(p)
    return C.is_constant() and C == casoratian_closed(p)


def laguerre_first(p: ChgParams | int, n: int | None = None) -> DensePoly:
    """N! n!/(N+n)! L_N^(n)(x), which is phi."""
    return phi(_params(p, n))


def laguerre_second(p: ChgParams | int, n: int | None = None) -> tuple[int, DensePoly]:
    """(pole order, numerator) for n!/(N+n)! x^-n P(N, n, x)."""
    p = _params(p, n)
    return p.n, psibar(p)


def laguerre_classical(N: int, n: int) -> DensePoly:
    """The associated Laguerre polynomial L_N^(n) from its explicit sum."""
    return DensePoly({k: (-1) ** k * binomial(N + n, N - k) / factorial(k) for k in range(N + 1)})


def p_at_zero(p: ChgParams | int, n: int | None = None) -> Fraction:
    """N!(n-1)!; undefined for n = 0."""
    p = _params(p, n)
    if p.n == 0:
        raise ValueError("P(N, 0, 0) has no factorial closed form (n = 0)")
    return factorial(p.N) * factorial(p.n - 1)
