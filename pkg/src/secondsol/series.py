"""Two expansions of the degenerate second solution about x = 0 (x > 0).

``psi_dl`` is the Laurent-log series

    N!n! sum_{k=1}^{n} (k-1)!/((n-k)!(N+k)!) x^-k
  - sum_{k=0}^{N} phi_k x^k (ln x + psi(1+N-k) - psi(1+k) - psi(1+n+k))
  + (-1)^(1+N) N!n! sum_{k>=N+1} (k-N-1)!/((n+k)! k!) x^k

with phi_k the coefficients of 1F1(-N; n+1; x).  The tail starts at
k = N + 1 (= 1 - a).  ``psi_pm`` expands the closed form

    psibar(N, n, x) e^x / x^n + phi(N, n, x) (-ln x - gamma_E - sum_{k>=1} x^k/(k k!)).

Both sides are emitted at the same scale: neither is rescaled, and the
x^k ln x coefficient of each is -phi_k.  Digamma at positive integers is
psi(1+m) = H_m - gamma_E, so everything stays in Q + Q*gamma_E.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chg import ChgParams, _params, phi, psibar
from .exactcore import DensePoly, LaurentLogExpansion, exp_truncated, factorial, harmonic, rational_to_json

NORMALIZATION = "unit: both sides as displayed, x^k ln x coefficient = -phi_k"


def psi_dl(p: ChgParams | int, M: int, n: int | None = None) -> LaurentLogExpansion:
    p = _params(p, n)
    N, n = p.N, p.n
    if M < 0:
        raise ValueError("truncation order must be nonnegative")
    scale = factorial(N) * factorial(n)
    pole = {-k: scale * factorial(k - 1) / (factorial(n - k) * factorial(N + k)) for k in range(1, n + 1)}
    rational, gamma, log = {}, {}, {}
    for k in range(min(N, M) + 1):
        phi_k = scale * (-1) ** k / (factorial(N - k) * factorial(n + k) * factorial(k))
        log[k] = -phi_k
        # psi(1+N-k) - psi(1+k) - psi(1+n+k) = H_{N-k} - H_k - H_{n+k} + gamma_E
        rational[k] = -phi_k * (harmonic(N - k) - harmonic(k) - harmonic(n + k))
        gamma[k] = -phi_k
    sign = -1 if N % 2 == 0 else 1
    for k in range(N + 1, M + 1):
        rational[k] = sign * scale * factorial(k - N - 1) / (factorial(n + k) * factorial(k))
    return LaurentLogExpansion(M, pole=pole, rational=rational, gamma=gamma, log=log)


def pm_exponential_part(p: ChgParams, M: int) -> LaurentLogExpansion:
    """psibar e^x x^-n, truncated at x^M."""
    body = (psibar(p) * exp_truncated(M + p.n)).truncate(M + p.n)
    return LaurentLogExpansion.from_poly(body, M, shift=-p.n)


def pm_ei_part(p: ChgParams, M: int) -> LaurentLogExpansion:
    """phi times the expansion of int_{-x}^inf e^-s/s ds = -ln x - gamma_E - sum x^k/(k k!)."""
    f = phi(p).truncate(M)
    series = DensePoly({k: Fraction(1) / (k * factorial(k)) for k in range(1, M + 1)})
    rational = -(f * series).truncate(M)
    return LaurentLogExpansion(M, rational=rational.coeffs, gamma=(-f).coeffs, log=(-f).coeffs)


def psi_pm(p: ChgParams | int, M: int, n: int | None = None) -> LaurentLogExpansion:
    p = _params(p, n)
    if M < 0:
        raise ValueError("truncation order must be nonnegative")
    return pm_exponential_part(p, M) + pm_ei_part(p, M)


@dataclass(frozen=True)
class ExpansionReport:
    params: ChgParams
    order: int
    equal: bool
    first_mismatch: tuple | None = None
    normalization: str = NORMALIZATION
    lhs: LaurentLogExpansion | None = field(default=None, compare=False, repr=False)
    rhs: LaurentLogExpansion | None = field(default=None, compare=False, repr=False)

    def to_json(self, expansions: bool = True) -> dict:
        mm = None
        if self.first_mismatch is not None:
            ch, e, a, b = self.first_mismatch
            mm = {"channel": ch, "exponent": e, "lhs": rational_to_json(a), "rhs": rational_to_json(b)}
        out = {
            "params": {"N": self.params.N, "n": self.params.n},
            "order": self.order,
            "equal": self.equal,
            "first_mismatch": mm,
            "normalization": self.normalization,
        }
        if expansions and self.lhs is not None:
            out["psi_pm"] = self.lhs.to_json()
            out["psi_dl"] = self.rhs.to_json()
        return out


def compare_expansions(p: ChgParams, M: int, lhs: LaurentLogExpansion, rhs: LaurentLogExpansion) -> ExpansionReport:
    mm = lhs.first_mismatch(rhs)
    return ExpansionReport(p, M, mm is None, mm, lhs=lhs, rhs=rhs)


def compare(p: ChgParams | int, M: int, n: int | None = None) -> ExpansionReport:
    """Coefficientwise check psi_pm == psi_dl through x^M."""
    p = _params(p, n)
    return compare_expansions(p, M, psi_pm(p, M), psi_dl(p, M))
