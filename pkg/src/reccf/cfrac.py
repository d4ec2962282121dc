"""Continued fractions of exact rationals.

Expansions are canonical: floor-based partial quotients ``a0, a1, ..., aR``
with ``ai >= 1`` for ``i >= 1`` and ``aR >= 2`` whenever ``R >= 1``.  The length
``psi(x)`` is the number of partial quotients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

ConvergentTable = List[Tuple[int, int]]


@dataclass(frozen=True)
class RationalCF:
    quotients: Tuple[int, ...]
    source: Fraction

    @classmethod
    def from_quotients(cls, quotients: Sequence[int]) -> "RationalCF":
        qs = tuple(int(a) for a in quotients)
        if not qs:
            raise ValueError("empty continued fraction")
        if any(a < 1 for a in qs[1:]):
            raise ValueError("partial quotients after the first must be >= 1")
        if len(qs) > 1 and qs[-1] < 2:
            raise ValueError("last partial quotient must be >= 2 in canonical form")
        p, q = _convergents(qs)[-1]
        return cls(qs, Fraction(p, q))

    def __len__(self) -> int:
        return len(self.quotients)


def _quotients(num: int, den: int) -> List[int]:
    out = []
    while den:
        a, r = divmod(num, den)
        out.append(a)
        num, den = den, r
    return out


def _convergents(quotients: Sequence[int]) -> ConvergentTable:
    table = []
    p_prev, p, q_prev, q = 1, quotients[0], 0, 1
    table.append((p, q))
    for a in quotients[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        table.append((p, q))
    return table


def cf_of_rational(x) -> RationalCF:
    """Canonical expansion of ``x``.

    >>> cf_of_rational(Fraction(355, 113)).quotients
    (3, 7, 16)
    >>> cf_of_rational(Fraction(-7, 3)).quotients
    (-3, 1, 2)
    """
    x = Fraction(x)
    return RationalCF(tuple(_quotients(x.numerator, x.denominator)), x)


def convergents(cf: RationalCF) -> ConvergentTable:
    return _convergents(cf.quotients)


def psi(x) -> int:
    """Length of the canonical continued fraction of ``x``."""
    x = Fraction(x)
    num, den, k = x.numerator, x.denominator, 0
    while den:
        num, den = den, num % den
        k += 1
    return k


def reconstruct(cf: RationalCF) -> Fraction:
    p, q = _convergents(cf.quotients)[-1]
    return Fraction(p, q)
