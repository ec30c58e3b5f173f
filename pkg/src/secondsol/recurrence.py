"""Second-order linear recurrences a_n y_{n+2} + b_n y_{n+1} + c_n y_n = 0.

Forward iteration, the reduction-of-order second solution, the rescaling to
Y_{n+2} = beta_n Y_{n+1} + gamma_n Y_n, Casorati determinants and the
constant-coefficient closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exactcore import Q, Rational, binomial, factorial


class RecurrenceError(ValueError):
    """Raised when a recurrence precondition fails at a specific index."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"{message} (at n={index})")
        self.index = index


class VanishingCoefficient(RecurrenceError):
    pass


class NotASolution(RecurrenceError):
    pass


class VanishingSolution(RecurrenceError):
    pass


Coefficient = Callable[[int], Fraction]


def poly_in_n(coeffs: Sequence[Rational]) -> Coefficient:
    """Coefficient provider c_0 + c_1 n + c_2 n^2 + ... (ascending powers)."""
    cs = tuple(Q(c) for c in coeffs)

    def provider(n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * n + c
        return acc

    provider.coeffs = cs
    return provider


@dataclass(frozen=True)
class RecurrenceSpec:
    a: Coefficient
    b: Coefficient
    c: Coefficient
    name: str = "custom"

    @classmethod
    def from_polys(cls, a, b, c, name: str = "custom") -> RecurrenceSpec:
        return cls(poly_in_n(a), poly_in_n(b), poly_in_n(c), name)

    def coefficients(self, n: int) -> tuple[Fraction, Fraction, Fraction]:
        a, b, c = Q(self.a(n)), Q(self.b(n)), Q(self.c(n))
        if a == 0:
            raise VanishingCoefficient("a_n vanishes", n)
        if c == 0:
            raise VanishingCoefficient("c_n vanishes", n)
        return a, b, c

    def residual(self, y: Sequence[Fraction], n: int) -> Fraction:
        a, b, c = self.coefficients(n)
        return a * y[n + 2] + b * y[n + 1] + c * y[n]

    def is_solution(self, y: Sequence[Fraction]) -> bool:
        return all(self.residual(y, n) == 0 for n in range(len(y) - 2))


@dataclass(frozen=True)
class Orbit:
    """Finite solution segment y_0 ... y_N."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Q(v) for v in self.values))

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def N(self) -> int:
        return len(self.values) - 1


def iterate(spec: RecurrenceSpec, y0: Rational, y1: Rational, N: int) -> Orbit:
    """Solve forward for y_{n+2}; returns y_0 .. y_N."""
    ys = [Q(y0), Q(y1)][: N + 1]
    for n in range(N - 1):
        a, b, c = spec.coefficients(n)
        ys.append(-(b * ys[n + 1] + c * ys[n]) / a)
    return Orbit(ys)


def dalembert_second(spec: RecurrenceSpec, f: Orbit | Sequence, N: int | None = None) -> Orbit:
    """Second solution y_n = f_1 f_n sum_{k=1}^{n-1} prod_{l<k}(c_l/a_l) / (f_k f_{k+1}).

    ``f`` must be a nonvanishing solution covering indices 0..N.  Entry 1
    is the empty sum.  Entry 0 is -1: extending the sum below its lower
    limit (sum_{k=1}^{-1} = -term_0) is the only value that keeps the
    output a solution at n = 0, and it agrees with every closed form
    (e.g. (n-1) r^n at n = 0).
    """
    f = Orbit(tuple(f))
    if N is None:
        N = f.N
    if f.N < N or N < 1:
        raise RecurrenceError(f"first solution covers 0..{f.N}, need 0..{N} with N >= 1")
    for k in range(N + 1):
        if f[k] == 0:
            raise VanishingSolution("first solution vanishes", k)
    for n in range(N - 1):
        if spec.residual(f.values, n) != 0:
            raise NotASolution("supplied first solution does not satisfy the recurrence", n)

    out = [Fraction(-1), Fraction(0)]
    running_sum = Fraction(0)
    ratio_product = Fraction(1)  # prod_{l=0}^{k-1} c_l / a_l
    for n in range(2, N + 1):
        k = n - 1
        a, _, c = spec.coefficients(k - 1)
        ratio_product *= c / a
        running_sum += ratio_product / (f[k] * f[k + 1])
        out.append(f[1] * f[n] * running_sum)
    y2 = Orbit(out[: N + 1])
    if not spec.is_solution(y2.values):
        # derivation guarantees this; a failure means the inputs were inconsistent
        raise NotASolution("reduction-of-order output failed substitution")
    return y2


def prefactor_products(spec: RecurrenceSpec, N: int) -> list[Fraction]:
    """A_n = prod_{l=0}^{n-2} a_l for n = 0..N, so that y_n = Y_n / A_n."""
    out = []
    acc = Fraction(1)
    for n in range(N + 1):
        if n >= 2:
            acc *= spec.coefficients(n - 2)[0]
        out.append(acc)
    return out


def transform_to_Y(spec: RecurrenceSpec, N: int) -> tuple[Orbit, list[Fraction], list[Fraction]]:
    """Rescale to Y_{n+2} = beta_n Y_{n+1} + gamma_n Y_n.

    Returns (prefactor, beta, gamma) where prefactor[n] = prod_{l=0}^{n-2} 1/a_l,
    beta_n = -b_n and gamma_n = -a_{n-1} c_n with a_{-1} = 1, for n = 0..N.
    """
    pref = Orbit(tuple(1 / A for A in prefactor_products(spec, N)))
    beta, gamma = [], []
    for n in range(N + 1):
        a_prev = Fraction(1) if n == 0 else spec.coefficients(n - 1)[0]
        _, b, c = spec.coefficients(n)
        beta.append(-b)
        gamma.append(-a_prev * c)
    return pref, beta, gamma


def iterate_Y(beta: Sequence[Fraction], gamma: Sequence[Fraction], Y0: Rational, Y1: Rational, N: int) -> Orbit:
    Ys = [Q(Y0), Q(Y1)][: N + 1]
    for n in range(N - 1):
        Ys.append(beta[n] * Ys[n + 1] + gamma[n] * Ys[n])
    return Orbit(Ys)


def fundamental_pair(beta: Sequence[Fraction], gamma: Sequence[Fraction], N: int) -> tuple[Orbit, Orbit]:
    """The pair f_1(n) = Y_{n+1} from (Y_0, Y_1) = (1, 0) and f_2(n) from (0, 1), n = 0..N."""
    A = iterate_Y(beta, gamma, 1, 0, N + 1)
    B = iterate_Y(beta, gamma, 0, 1, N + 1)
    return Orbit(A.values[1:]), Orbit(B.values[1:])


def casorati(f: Sequence, g: Sequence, n: int) -> Fraction:
    """C(n+1) = f(n) g(n+1) - g(n) f(n+1)."""
    if n < 0 or n + 1 >= min(len(f), len(g)):
        raise IndexError(f"Casorati determinant at n={n} needs both orbits through n+1")
    return Q(f[n]) * Q(g[n + 1]) - Q(g[n]) * Q(f[n + 1])


def casorati_gamma_product(gamma: Sequence[Rational], n: int) -> Fraction:
    """(-1)^(n+1) prod_{l=0}^{n} gamma_l."""
    out = Fraction(-1 if n % 2 == 0 else 1)
    for l in range(n + 1):
        out *= Q(gamma[l])
    return out


def const_coeff_Y(beta: Rational, gamma: Rational, Y0: Rational, Y1: Rational, n: int) -> Fraction:
    """Y_n for constant beta, gamma through the binomial double sum.

    The Y_0 sum runs to floor((n-2)/2); the value floor((n-1)/2) - 1 would
    drop the gamma^(n/2) term for even n (e.g. Y_2 = beta Y_1 + gamma Y_0).
    """
    beta, gamma, Y0, Y1 = Q(beta), Q(gamma), Q(Y0), Q(Y1)
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return Y0
    first = sum(
        (binomial(n - 1 - k, k) * beta ** (n - 2 * k - 1) * gamma**k for k in range((n - 1) // 2 + 1)),
        Fraction(0),
    )
    second = sum(
        (binomial(n - 2 - k, k) * beta ** (n - 2 * k - 2) * gamma ** (k + 1) for k in range((n - 2) // 2 + 1)),
        Fraction(0),
    )
    return Y1 * first + Y0 * second


def root_power_ratio(beta: Rational, gamma: Rational, n: int) -> Fraction:
    """(r1^n - r2^n)/(r1 - r2) for the roots of r^2 = beta r + gamma, radical-free."""
    beta, gamma = Q(beta), Q(gamma)
    if n <= 0:
        return Fraction(0)
    disc = beta * beta + 4 * gamma
    total = sum(
        (binomial(n, 2 * l + 1) * beta ** (n - 2 * l - 1) * disc**l for l in range((n - 1) // 2 + 1)),
        Fraction(0),
    )
    return total / 2 ** (n - 1)


def verify_Y_form(spec: RecurrenceSpec, y2: Sequence) -> bool:
    """Check Y_{n+2} + b_n Y_{n+1} + a_{n-1} c_n Y_n = 0 for Y_n = y_n prod_{l<=n-2} a_l."""
    A = prefactor_products(spec, len(y2) - 1)
    Y = [Q(v) * A[n] for n, v in enumerate(y2)]
    for n in range(len(Y) - 2):
        a_prev = Fraction(1) if n == 0 else spec.coefficients(n - 1)[0]
        _, b, c = spec.coefficients(n)
        if Y[n + 2] + b * Y[n + 1] + a_prev * c * Y[n] != 0:
            return False
    return True


# -- the worked examples ----------------------------------------------------

def double_root(r: Rational = 2) -> tuple[RecurrenceSpec, Callable[[int], Fraction]]:
    """y_{n+2} - 2r y_{n+1} + r^2 y_n = 0 with first solution r^n."""
    r = Q(r)
    if r == 0:
        raise ValueError("double root must be nonzero")
    spec = RecurrenceSpec.from_polys([1], [-2 * r], [r * r], name="double-root")
    return spec, lambda n: r**n


def factorial_example() -> tuple[RecurrenceSpec, Callable[[int], Fraction]]:
    """y_{n+2} - (n+1) y_{n+1} - (n+1) y_n = 0 with first solution n!."""
    spec = RecurrenceSpec.from_polys([1], [-1, -1], [-1, -1], name="factorial")
    return spec, factorial


def harmonic_example() -> tuple[RecurrenceSpec, Callable[[int], Fraction]]:
    """(n+2) y_{n+2} - (2n+3) y_{n+1} + (n+1) y_n = 0 with constant first solution."""
    spec = RecurrenceSpec.from_polys([2, 1], [-3, -2], [1, 1], name="harmonic")
    return spec, lambda n: Fraction(1)


def ex4_example() -> tuple[RecurrenceSpec, Callable[[int], Fraction]]:
    """(n+1) y_{n+2} - (n^2+7n+8) y_{n+1} + 2(n+2)(n+3) y_n = 0 with first solution 2^n."""
    spec = RecurrenceSpec.from_polys([1, 1], [-8, -7, -1], [12, 10, 2], name="ex4")
    return spec, lambda n: Fraction(2) ** n


EXAMPLES = {
    "double-root": double_root,
    "factorial": factorial_example,
    "harmonic": harmonic_example,
    "ex4": ex4_example,
}


def first_orbit(first: Callable[[int], Fraction], N: int) -> Orbit:
    return Orbit(tuple(Q(first(n)) for n in range(N + 1)))
