"""Exact scalars, univariate polynomials over Q, and Laurent-log expansions.

Scalars are :class:`fractions.Fraction` throughout; nothing here touches
floating point.  ``DensePoly`` keeps only nonzero coefficients, keyed by
exponent.  ``LaurentLogExpansion`` holds a truncated expansion

    sum_{m<0} p_m x^m + sum_{k>=0} (r_k + g_k * gamma_E) x^k + sum_{k>=0} l_k x^k ln(x)

where the Euler constant is kept as a formal basis element.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]

#: degree of the zero polynomial
MINUS_INFINITY = float("-inf")


def Q(value: Rational | str) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    return value if isinstance(value, Fraction) else Fraction(value)


def factorial(m: int) -> Fraction:
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    out = 1
    for k in range(2, m + 1):
        out *= k
    return Fraction(out)


def pochhammer(a: Rational, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1); the empty product is 1."""
    if k < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {k}")
    a = Q(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
        if out == 0:
            break
    return out


def binomial(n: int, k: int) -> Fraction:
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return factorial(n) / (factorial(k) * factorial(n - k))


def harmonic_range(lo: int, hi: int) -> Fraction:
    """Sum of 1/k for lo <= k <= hi, zero when hi < lo."""
    if lo < 1:
        raise ValueError(f"harmonic_range needs lo >= 1, got {lo}")
    return sum((Fraction(1, k) for k in range(lo, hi + 1)), Fraction(0))


def harmonic(m: int) -> Fraction:
    return harmonic_range(1, m)


class DensePoly:
    """Univariate polynomial with rational coefficients.

    Immutable.  ``coeffs`` maps exponent -> nonzero Fraction.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Rational] | Iterable[Rational] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                v = Q(v)
                if v:
                    c[int(e)] = v
        else:
            # ascending coefficient list
            for e, v in enumerate(coeffs):
                v = Q(v)
                if v:
                    c[e] = v
        self._c = c

    # -- constructors
    @classmethod
    def constant(cls, v: Rational) -> DensePoly:
        return cls({0: v})

    @classmethod
    def monomial(cls, v: Rational, e: int) -> DensePoly:
        return cls({e: v})

    @classmethod
    def x(cls) -> DensePoly:
        return cls({1: 1})

    # -- inspection
    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def degree(self):
        return max(self._c) if self._c else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        return self._c[max(self._c)] if self._c else Fraction(0)

    def is_constant(self) -> bool:
        return not self._c or self.degree() == 0

    def items_descending(self) -> list[tuple[int, Fraction]]:
        return sorted(self._c.items(), reverse=True)

    # -- ring operations
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DensePoly.constant(other)
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> DensePoly:
        return DensePoly({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> DensePoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return DensePoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> DensePoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> DensePoly:
        return (-self) + other

    def __mul__(self, other) -> DensePoly:
        if isinstance(other, (int, Fraction)):
            return DensePoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, DensePoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return DensePoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> DensePoly:
        """Division by a nonzero scalar only; use divrem for polynomials."""
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> DensePoly:
        if k < 0:
            raise ValueError("negative polynomial power")
        out = DensePoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> DensePoly:
        """Multiply by x**k (k >= 0)."""
        return DensePoly({e + k: v for e, v in self._c.items()})

    def derivative(self) -> DensePoly:
        return DensePoly({e - 1: e * v for e, v in self._c.items() if e > 0})

    def __call__(self, x: Rational) -> Fraction:
        return poly_eval(self, x)

    def divrem(self, q: DensePoly) -> tuple[DensePoly, DensePoly]:
        return poly_divrem(self, q)

    def __floordiv__(self, q: DensePoly) -> DensePoly:
        return poly_divrem(self, q)[0]

    def __mod__(self, q: DensePoly) -> DensePoly:
        return poly_divrem(self, q)[1]

    def truncate(self, M: int) -> DensePoly:
        """Drop every term above x**M."""
        return DensePoly({e: v for e, v in self._c.items() if e <= M})

    def monic(self) -> DensePoly:
        if not self._c:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self * (1 / self.leading_coefficient())

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._c.values())

    def __repr__(self):
        return f"DensePoly({format_poly(self)!r})"


def _as_poly(other):
    if isinstance(other, DensePoly):
        return other
    if isinstance(other, (int, Fraction)):
        return DensePoly.constant(other)
    return NotImplemented


def poly_arith(p: DensePoly, q: DensePoly, kind: str) -> DensePoly:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {kind!r}")


def poly_derivative(p: DensePoly) -> DensePoly:
    return p.derivative()


def poly_eval(p: DensePoly, x: Rational) -> Fraction:
    x = Q(x)
    if p.is_zero():
        return Fraction(0)
    # Horner over the dense range
    acc = Fraction(0)
    for e in range(p.degree(), -1, -1):
        acc = acc * x + p[e]
    return acc


def poly_divrem(p: DensePoly, q: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Return (quot, rem) with p == q*quot + rem and deg rem < deg q."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    dq = q.degree()
    lq = q.leading_coefficient()
    rem = dict(p.coeffs)
    quot: dict[int, Fraction] = {}
    while rem and max(rem) >= dq:
        dr = max(rem)
        factor = rem[dr] / lq
        quot[dr - dq] = factor
        for e, v in q.coeffs.items():
            k = e + dr - dq
            nv = rem.get(k, 0) - factor * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return DensePoly(quot), DensePoly(rem)


def exp_truncated(M: int) -> DensePoly:
    """Taylor polynomial of e^x through x**M."""
    if M < 0:
        raise ValueError(f"truncation order must be nonnegative, got {M}")
    out = {}
    term = Fraction(1)
    for k in range(M + 1):
        if k:
            term /= k
        out[k] = term
    return DensePoly(out)


def format_rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_poly(p: DensePoly, var: str = "x") -> str:
    """Render in descending powers with explicit signs, e.g. ``-x^3 + 11x^2 - 26x + 6``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, v) in enumerate(p.items_descending()):
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        if e == 0:
            body = format_rational(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag.numerator}{mono}"
            else:
                body = f"({format_rational(mag)}){mono}"
        if i == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# -- JSON encodings ---------------------------------------------------------

def rational_to_json(v: Rational) -> dict:
    v = Q(v)
    return {"num": str(v.numerator), "den": str(v.denominator)}


def rational_from_json(obj: Mapping) -> Fraction:
    den = int(obj["den"])
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    return Fraction(int(obj["num"]), den)


def poly_to_json(p: DensePoly) -> list:
    return [[e, str(v.numerator), str(v.denominator)] for e, v in p.items_descending()]


def poly_from_json(rows: Iterable) -> DensePoly:
    out = {}
    for e, num, den in rows:
        out[int(e)] = Fraction(int(num), int(den))
    return DensePoly(out)


# -- Laurent expansions with a log channel ---------------------------------

CHANNELS = ("pole", "log", "gamma", "rational")


@dataclass(frozen=True)
class LaurentLogExpansion:
    """Truncated expansion about x = 0 for real x > 0.

    ``pole`` holds exponents < 0; ``rational`` and ``gamma`` are the two
    components of the regular coefficient r + g*gamma_E; ``log`` holds the
    coefficient of x^k ln x.  Nothing above ``order`` is stored.
    """

    order: int
    pole: dict = field(default_factory=dict)
    rational: dict = field(default_factory=dict)
    gamma: dict = field(default_factory=dict)
    log: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(e >= 0 for e in self.pole):
            raise ValueError("pole part only takes negative exponents")
        for name in ("rational", "gamma", "log"):
            ch = getattr(self, name)
            if any(e < 0 for e in ch):
                raise ValueError(f"{name} channel only takes nonnegative exponents")
        for name in CHANNELS:
            ch = getattr(self, name)
            clean = {e: Q(v) for e, v in ch.items() if v and e <= self.order}
            object.__setattr__(self, name, clean)

    @property
    def regular(self) -> dict[int, tuple[Fraction, Fraction]]:
        keys = sorted(set(self.rational) | set(self.gamma))
        return {k: (self.rational.get(k, Fraction(0)), self.gamma.get(k, Fraction(0))) for k in keys}

    def coefficient(self, channel: str, e: int) -> Fraction:
        return getattr(self, channel).get(e, Fraction(0))

    def truncate(self, M: int) -> LaurentLogExpansion:
        M = min(M, self.order)
        return LaurentLogExpansion(M, self.pole, self.rational, self.gamma, self.log)

    def _combine(self, other: LaurentLogExpansion, sign: int) -> LaurentLogExpansion:
        M = min(self.order, other.order)
        chans = {}
        for name in CHANNELS:
            a, b = getattr(self, name), getattr(other, name)
            chans[name] = {e: a.get(e, 0) + sign * b.get(e, 0) for e in set(a) | set(b)}
        return LaurentLogExpansion(M, **chans)

    def __add__(self, other: LaurentLogExpansion) -> LaurentLogExpansion:
        return self._combine(other, 1)

    def __sub__(self, other: LaurentLogExpansion) -> LaurentLogExpansion:
        return self._combine(other, -1)

    def __neg__(self) -> LaurentLogExpansion:
        return self.scale(-1)

    def scale(self, c: Rational) -> LaurentLogExpansion:
        c = Q(c)
        return LaurentLogExpansion(
            self.order, **{name: {e: c * v for e, v in getattr(self, name).items()} for name in CHANNELS}
        )

    def first_mismatch(self, other: LaurentLogExpansion):
        """Return (channel, exponent, lhs, rhs) for the first disagreement, or None.

        Compared up to the smaller truncation order, channels in the order
        pole, log, gamma, rational, exponents ascending within each channel.
        """
        M = min(self.order, other.order)
        for name in CHANNELS:
            a, b = getattr(self, name), getattr(other, name)
            for e in sorted(set(a) | set(b)):
                if e > M:
                    continue
                va, vb = a.get(e, Fraction(0)), b.get(e, Fraction(0))
                if va != vb:
                    return name, e, va, vb
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentLogExpansion):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    @classmethod
    def from_poly(cls, p: DensePoly, order: int, shift: int = 0, channel: str = "rational") -> LaurentLogExpansion:
        """Embed x**shift * p; negative exponents go to the pole part."""
        pole, reg = {}, {}
        for e, v in p.coeffs.items():
            k = e + shift
            if k > order:
                continue
            (pole if k < 0 else reg)[k] = v
        if channel == "rational":
            return cls(order, pole=pole, rational=reg)
        if pole:
            raise ValueError(f"{channel} channel cannot carry negative exponents")
        return cls(order, **{channel: reg})

    def to_json(self) -> dict:
        def enc(ch):
            return [[e, *rational_to_json(v).values()] for e, v in sorted(ch.items())]

        return {
            "order": self.order,
            "pole": enc(self.pole),
            "regular": [[e, rational_to_json(r), rational_to_json(g)] for e, (r, g) in self.regular.items()],
            "log": enc(self.log),
        }
