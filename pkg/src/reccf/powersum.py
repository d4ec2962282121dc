"""Exact power sums ``n -> sum c_i * a_i**n`` with rational coefficients and roots.

A :class:`PowerSum` is always stored in canonical form: roots are positive
rationals in lowest terms, pairwise distinct, sorted in strictly descending
order, and every coefficient is nonzero.  The zero power sum has no terms.

The valuation ``ell`` is the largest root (``ell(0) == 0``).  It is
multiplicative and satisfies ``ell(a + b) <= max(ell(a), ell(b))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Iterator, Tuple, Union

from .errors import InvalidRootError

Term = Tuple[Fraction, Fraction]
Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _canonical(raw: Iterable) -> Tuple[Term, ...]:
    acc: dict[Fraction, Fraction] = {}
    for root, coeff in raw:
        root = _as_fraction(root)
        if root <= 0:
            raise InvalidRootError(f"root must be positive, got {root}")
        acc[root] = acc.get(root, Fraction(0)) + _as_fraction(coeff)
    return tuple(
        (root, acc[root]) for root in sorted(acc, reverse=True) if acc[root] != 0
    )


@dataclass(frozen=True)
class PowerSum:
    """Immutable exact power sum.

    ``terms`` accepts any iterable of ``(root, coefficient)`` pairs; the stored
    value is the merged, zero-free, descending form.

    >>> PowerSum([(2, 1), (2, 1)])
    PowerSum(2*2^n)
    >>> PowerSum([(2, 1), (Fraction(1, 2), 3)])(3)
    Fraction(67, 8)
    """

    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _canonical(self.terms))

    @classmethod
    def constant(cls, c: Scalar) -> "PowerSum":
        return cls(((1, c),))

    @classmethod
    def monomial(cls, root: Scalar, coeff: Scalar = 1) -> "PowerSum":
        return cls(((root, coeff),))

    @classmethod
    def _trusted(cls, terms: Tuple[Term, ...]) -> "PowerSum":
        # skips normalization; caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def _from_dict(cls, acc: dict) -> "PowerSum":
        return cls._trusted(
            tuple((r, acc[r]) for r in sorted(acc, reverse=True) if acc[r] != 0)
        )

    # -- inspection ---------------------------------------------------------

    @property
    def roots(self) -> Tuple[Fraction, ...]:
        return tuple(r for r, _ in self.terms)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return tuple(c for _, c in self.terms)

    @property
    def ell(self) -> Fraction:
        return self.terms[0][0] if self.terms else Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[0][1] if self.terms else Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        """True for a nonzero power sum whose only root is 1."""
        return len(self.terms) == 1 and self.terms[0][0] == 1

    def is_in_E(self) -> bool:
        return all(r.denominator == 1 for r, _ in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "PowerSum":
        if isinstance(other, PowerSum):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSum.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for r, c in other.terms:
            acc[r] = acc.get(r, 0) + c
        return PowerSum._from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "PowerSum":
        return PowerSum._trusted(tuple((r, -c) for r, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PowerSum):
            return NotImplemented
        acc: dict[Fraction, Fraction] = {}
        for r1, c1 in self.terms:
            for r2, c2 in other.terms:
                r = r1 * r2
                acc[r] = acc.get(r, 0) + c1 * c2
        return PowerSum._from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSum":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = PowerSum.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, by: Scalar) -> "PowerSum":
        by = _as_fraction(by)
        if by == 0:
            return PowerSum()
        return PowerSum._trusted(tuple((r, c * by) for r, c in self.terms))

    def scale_roots(self, factor: Scalar) -> "PowerSum":
        """Multiply every root by ``factor``: the result is ``n -> self(n) * factor**n``."""
        factor = _as_fraction(factor)
        if factor <= 0:
            raise InvalidRootError(f"root scaling factor must be positive, got {factor}")
        return PowerSum._trusted(tuple((r * factor, c) for r, c in self.terms))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("power sums are evaluated at nonnegative integers")
        return sum((c * r**n for r, c in self.terms), Fraction(0))

    def __repr__(self) -> str:
        return f"PowerSum({self})"

    def __str__(self) -> str:
        from .expr import render

        return render(self)


# Functional surface -------------------------------------------------------


def normalize(raw_terms: Iterable) -> PowerSum:
    return PowerSum(raw_terms)


def add(alpha: PowerSum, beta: PowerSum) -> PowerSum:
    return alpha + beta


def sub(alpha: PowerSum, beta: PowerSum) -> PowerSum:
    return alpha - beta


def neg(alpha: PowerSum) -> PowerSum:
    return -alpha


def scale(alpha: PowerSum, by: Scalar) -> PowerSum:
    return alpha.scale(by)


def mul(alpha: PowerSum, beta: PowerSum) -> PowerSum:
    return alpha * beta


def ell(alpha: PowerSum) -> Fraction:
    return alpha.ell


def evaluate(alpha: PowerSum, n: int) -> Fraction:
    return alpha(n)


def scale_roots(alpha: PowerSum, factor: Scalar) -> PowerSum:
    return alpha.scale_roots(factor)


def is_in_E(alpha: PowerSum) -> bool:
    return alpha.is_in_E()


def integer_root_subsum(alpha: PowerSum) -> PowerSum:
    return PowerSum._trusted(tuple(t for t in alpha.terms if t[0].denominator == 1))


def min_clearing_denominator(zeta: PowerSum) -> int:
    """Least ``D >= 1`` such that ``D**n * zeta(n)`` has only integer roots."""
    return lcm(1, *(r.denominator for r, _ in zeta.terms))
