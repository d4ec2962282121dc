"""Euclidean division and finite continued fractions over integer-root power sums.

A Euclid step for ``alpha : beta`` is a ``zeta`` with integer roots and
``ell(alpha - zeta*beta) < ell(beta)``.  If ``eta`` approximates the quotient
to within ``t = ell(beta)``, any such ``zeta`` must agree with ``eta`` on every
root ``>= 1``; so the step exists iff that part of ``eta`` has only integer
roots, and then it *is* ``zeta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .approx import approximate_quotient
from .errors import DegenerateExpansionError, DomainError, UndefinedQuotientError
from .powersum import PowerSum


@dataclass(frozen=True)
class DivisionOutcome:
    """Either ``quotient``/``remainder`` (a Euclid step) or a ``refutation`` root."""

    quotient: Optional[PowerSum] = None
    remainder: Optional[PowerSum] = None
    refutation: Optional[Fraction] = None

    @property
    def exists(self) -> bool:
        return self.quotient is not None


def _check_E(**values: PowerSum):
    for name, v in values.items():
        if not v.is_in_E():
            raise DomainError(f"{name} must have positive integer roots, got {v}")


def try_divide(alpha: PowerSum, beta: PowerSum) -> DivisionOutcome:
    """Find the Euclid step of ``alpha`` by ``beta`` or certify there is none.

    >>> from reccf.expr import parse_power_sum as ps
    >>> out = try_divide(ps("4^n + 2^n + 1"), ps("2^n"))
    >>> str(out.quotient), str(out.remainder)
    ('2^n + 1', '1')
    >>> try_divide(ps("3^n"), ps("2^n")).refutation
    Fraction(3, 2)
    """
    if not beta:
        raise UndefinedQuotientError("division by the zero power sum")
    _check_E(alpha=alpha, beta=beta)
    if not alpha:
        return DivisionOutcome(PowerSum(), PowerSum())

    eta = approximate_quotient(alpha, beta, beta.ell).eta
    head = [(r, c) for r, c in eta.terms if r >= 1]
    bad = [r for r, _ in head if r.denominator != 1]
    if bad:
        return DivisionOutcome(refutation=bad[0])
    zeta = PowerSum._trusted(tuple(head))
    remainder = alpha - zeta * beta
    assert remainder.ell < beta.ell
    return DivisionOutcome(zeta, remainder)


@dataclass(frozen=True)
class SymbolicCF:
    """Finite continued fraction ``[z0, z1, ..., zk]`` with power-sum entries."""

    quotients: Tuple[PowerSum, ...]

    def __post_init__(self):
        object.__setattr__(self, "quotients", tuple(self.quotients))
        if not self.quotients:
            raise ValueError("a continued fraction needs at least one partial quotient")

    def __len__(self):
        return len(self.quotients)

    def __iter__(self):
        return iter(self.quotients)

    def fold(self) -> Tuple[PowerSum, PowerSum]:
        return fold(self)

    def evaluate(self, n: int) -> Optional[Fraction]:
        """Value at ``n``, or ``None`` when some tail evaluates to zero."""
        value = self.quotients[-1](n)
        for z in reversed(self.quotients[:-1]):
            if value == 0:
                return None
            value = z(n) + 1 / value
        return value

    def is_normalized(self) -> bool:
        return not any(z.is_constant() or not z for z in self.quotients[1:])

    def __str__(self):
        return "[" + ", ".join(str(z) for z in self.quotients) + "]"


@dataclass(frozen=True)
class NoExpansion:
    """``alpha/beta`` has no finite continued fraction over integer-root power sums."""

    step: int
    root: Fraction
    partial: Tuple[PowerSum, ...] = ()


def fold(cf: Union[SymbolicCF, Sequence[PowerSum]]) -> Tuple[PowerSum, PowerSum]:
    """Numerator and denominator of ``cf`` via the convergent recurrence."""
    qs = list(cf.quotients if isinstance(cf, SymbolicCF) else cf)
    p_prev, p = PowerSum.constant(1), qs[0]
    q_prev, q = PowerSum(), PowerSum.constant(1)
    for z in qs[1:]:
        p_prev, p = p, z * p + p_prev
        q_prev, q = q, z * q + q_prev
    return p, q


def _cross_equal(a: Tuple[PowerSum, PowerSum], b: Tuple[PowerSum, PowerSum]) -> bool:
    return a[0] * b[1] == b[0] * a[1]


def _absorb_once(qs: list, i: int) -> list:
    c = qs[i].leading_coefficient
    if i == len(qs) - 1:
        return qs[: i - 1] + [qs[i - 1] + 1 / c]
    # [A, c, B0, B1, B2, ...] -> [A + 1/c, -c^2 B0 - c, B1 / -c^2, -c^2 B2, ...]
    lam = -c * c
    tail = [
        z.scale(1 / lam) if k % 2 == 0 else z.scale(lam)
        for k, z in enumerate(qs[i + 2 :])
    ]
    return qs[: i - 1] + [qs[i - 1] + 1 / c, qs[i + 1].scale(lam) - c] + tail


def absorb_constants(cf: SymbolicCF) -> SymbolicCF:
    """Remove constant partial quotients at positions ``>= 1``.

    Uses ``[A, c, B] = [A + 1/c, -c(cB + 1)]`` (the tail after ``B`` is rescaled
    to match) and ``[..., A, c] = [..., A + 1/c]``, repeated until no constant
    remains past the first entry.
    """
    qs = list(cf.quotients)
    for i, z in enumerate(qs[1:], 1):
        if not z:
            raise DegenerateExpansionError(f"zero partial quotient at index {i}")
    original = fold(qs)
    while True:
        idx = next((i for i in range(1, len(qs)) if qs[i].is_constant()), None)
        if idx is None:
            break
        qs = _absorb_once(qs, idx)
        for i, z in enumerate(qs[1:], 1):
            if not z:
                raise DegenerateExpansionError(f"absorption produced a zero quotient at index {i}")
    result = SymbolicCF(qs)
    if not _cross_equal(original, fold(qs)):
        raise ArithmeticError("constant absorption changed the folded ratio")
    return result


def cf_expand(alpha: PowerSum, beta: PowerSum) -> Union[SymbolicCF, NoExpansion]:
    """Continued fraction of ``alpha/beta`` over integer-root power sums, if any.

    Each step divides with :func:`try_divide`; valuations of successive
    remainders strictly decrease through the positive integers, so the loop
    terminates.
    """
    if not beta:
        raise UndefinedQuotientError("division by the zero power sum")
    _check_E(alpha=alpha, beta=beta)
    num, den = alpha, beta
    quotients = []
    while True:
        outcome = try_divide(num, den)
        if not outcome.exists:
            return NoExpansion(len(quotients), outcome.refutation, tuple(quotients))
        quotients.append(outcome.quotient)
        if not outcome.remainder:
            break
        num, den = den, outcome.remainder
    return absorb_constants(SymbolicCF(quotients))
