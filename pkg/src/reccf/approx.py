"""Approximate quotients of power sums with respect to the valuation ``ell``.

Given nonzero ``alpha`` and ``beta`` and a threshold ``t > 0`` we build ``eta``
with ``ell(alpha - eta*beta) < t``.  Writing ``beta = c * b**n * (1 - delta)``
with ``b = ell(beta)`` and ``u = ell(delta) < 1``, ``eta`` is the truncated
geometric series ``alpha / (c b**n) * sum_{r<=R} delta**r``.  The residual is
then exactly ``alpha * delta**(R+1)``, whose valuation is ``ell(alpha) *
u**(R+1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidThresholdError, UndefinedQuotientError
from .powersum import PowerSum, Scalar


@dataclass(frozen=True)
class ApproxCertificate:
    eta: PowerSum
    truncation_order: int
    residual_valuation: Fraction
    threshold: Fraction


def split_leading(beta: PowerSum):
    """Return ``(c, b, delta)`` with ``beta == c * b**n * (1 - delta)``."""
    c, b = beta.leading_coefficient, beta.ell
    delta = 1 - beta.scale(1 / c).scale_roots(1 / b)
    return c, b, delta


def truncation_order(u: Fraction, ell_alpha: Fraction, t: Fraction) -> int:
    """Least ``R >= 0`` with ``u**R < t / (u * ell_alpha)``, in exact arithmetic."""
    bound = t / (u * ell_alpha)
    R, power = 0, Fraction(1)
    while not power < bound:
        power *= u
        R += 1
    return R


def approximate_quotient(alpha: PowerSum, beta: PowerSum, t: Scalar) -> ApproxCertificate:
    if not alpha or not beta:
        raise UndefinedQuotientError("approximate quotient needs nonzero alpha and beta")
    t = Fraction(t)
    if t <= 0:
        raise InvalidThresholdError(f"threshold must be positive, got {t}")

    c, b, delta = split_leading(beta)
    base = alpha.scale(1 / c).scale_roots(1 / b)
    if not delta:
        R, eta = 0, base
    else:
        R = truncation_order(delta.ell, alpha.ell, t)
        series = PowerSum.constant(1)
        for _ in range(R):
            series = 1 + delta * series
        eta = base * series

    residual = (alpha - eta * beta).ell
    if not residual < t:
        raise ArithmeticError(f"residual valuation {residual} is not below {t}")
    return ApproxCertificate(eta, R, residual, t)
