"""The polynomials P_n, Q_n in beta_i and gamma_{i,i+1}.

A word is a token sequence over {"B", "G"}.  Reading left to right from a
base index, B takes one slot (beta_i) and G takes two adjacent slots
(gamma_{i,i+1}).  P_n is the set of all words filling slots 0..n-1; Q_n
fills 1..n.  Then

    Y_{n+1} = P_n Y_1 + gamma_{-1,0} Q_{n-1} Y_0.

Value sequences use the single-index convention gamma[k] = gamma_{k-1,k}
(so gamma[0] = gamma_{-1,0} = -c_0).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactcore import Q, Rational

Word = tuple  # tuple of "B" / "G"


@lru_cache(maxsize=None)
def _words(n: int) -> tuple[Word, ...]:
    # all tilings of n slots by B (width 1) and G (width 2), lexicographic with B < G
    if n == 0:
        return ((),)
    if n == 1:
        return (("B",),)
    return tuple(("B",) + w for w in _words(n - 1)) + tuple(("G",) + w for w in _words(n - 2))


def assign_indices(word: Word, base: int) -> list[tuple[str, int]]:
    """[(token, first slot)] for a word read from ``base``."""
    out, i = [], base
    for tok in word:
        out.append((tok, i))
        i += 1 if tok == "B" else 2
    return out


@dataclass(frozen=True)
class PQPoly:
    kind: str  # "P" or "Q"
    order: int
    words: tuple

    @property
    def base(self) -> int:
        return 0 if self.kind == "P" else 1

    def __len__(self):
        return len(self.words)

    def indexed(self) -> list[list[tuple[str, int]]]:
        return [assign_indices(w, self.base) for w in self.words]

    def word_strings(self) -> list[list[str]]:
        return [[_symbol(tok, i) for tok, i in word] for word in self.indexed()]

    def render(self) -> str:
        terms = [" ".join(syms) if syms else "1" for syms in self.word_strings()]
        return " + ".join(terms)


def _symbol(tok: str, i: int) -> str:
    return f"b{i}" if tok == "B" else f"g({i},{i + 1})"


def build_P(n: int) -> PQPoly:
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    return PQPoly("P", n, _words(n))


def build_Q(n: int) -> PQPoly:
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    return PQPoly("Q", n, _words(n))


def evaluate(p: PQPoly, beta: Sequence[Rational], gamma: Sequence[Rational]) -> Fraction:
    """Sum over words of the product of symbol values; gamma_{i,i+1} is gamma[i+1]."""
    total = Fraction(0)
    for word in p.indexed():
        term = Fraction(1)
        for tok, i in word:
            try:
                term *= Q(beta[i]) if tok == "B" else Q(gamma[i + 1])
            except IndexError:
                sym = _symbol(tok, i)
                raise IndexError(f"no value supplied for {sym}") from None
        total += term
    return total


def assemble_Y(n: int, Y0: Rational, Y1: Rational, beta: Sequence[Rational], gamma: Sequence[Rational]) -> Fraction:
    """Y_{n+1} = P_n Y_1 + gamma_{-1,0} Q_{n-1} Y_0 (Q_{-1} = 0)."""
    Y0, Y1 = Q(Y0), Q(Y1)
    out = evaluate(build_P(n), beta, gamma) * Y1
    if n >= 1:
        out += Q(gamma[0]) * evaluate(build_Q(n - 1), beta, gamma) * Y0
    return out


def matrix_iterate(n: int, Y0: Rational, Y1: Rational, beta: Sequence[Rational], gamma: Sequence[Rational]) -> Fraction:
    """Y_{n+1} from the product of [[beta_k, gamma_k], [1, 0]] for k = n-1 .. 0."""
    top, bottom = Q(Y1), Q(Y0)
    for k in range(n):
        top, bottom = Q(beta[k]) * top + Q(gamma[k]) * bottom, top
    return top
