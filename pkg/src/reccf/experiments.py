"""Desk-scale experiments on continued fractions of power-sum quotients.

Three probes, each returning a report whose records serialize to CSV or JSON:

* :func:`length_scan` -- ``psi(alpha(n)/beta(n))`` over a range of ``n``;
* :func:`thue_probe` -- how well convergents with small denominators
  approximate ``alpha(n)/beta(n)``, as measured exponents;
* :func:`denom_probe` -- growth of the denominator of ``zeta(n)``.

All decisions use exact arithmetic; logarithms appear only as reported values.
Per-``n`` work is independent and may be spread over ``RECCF_THREADS`` worker
processes; records are always emitted in ascending ``n``.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from functools import partial
from typing import Any, Callable, ClassVar, Dict, List, Optional, Sequence

from .cfrac import cf_of_rational, convergents, psi
from .errors import DomainError, UndefinedQuotientError
from .euclid import try_divide
from .expr import render
from .powersum import PowerSum, min_clearing_denominator

THREADS_ENV = "RECCF_THREADS"


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def _map_ordered(fn: Callable, ns: Sequence[int]) -> list:
    workers = min(worker_count(), max(1, len(ns)))
    if workers == 1:
        return [fn(n) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, ns, chunksize=max(1, len(ns) // (4 * workers))))


def _check_range(n_from: int, n_to: int, lowest: int = 1):
    if n_from < lowest or n_to < n_from:
        raise DomainError(f"invalid range n_from={n_from}, n_to={n_to}")


def _fmt(x: float) -> float:
    return float(f"{x:.12g}")


def _log_abs(x: Fraction) -> float:
    return math.log(abs(x.numerator)) - math.log(x.denominator)


@dataclass
class Report:
    record_type: ClassVar[type]

    config: Dict[str, Any]
    records: list
    summary: Dict[str, Any] = field(default_factory=dict)

    def rows(self) -> List[Dict[str, Any]]:
        return [asdict(r) for r in self.records]

    def to_json(self) -> str:
        payload = {"config": self.config, "records": self.rows(), "summary": self.summary}
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        names = [f.name for f in fields(self.record_type)]
        writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        writer.writeheader()
        for row in self.rows():
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
        return buf.getvalue()


# -- length scan ------------------------------------------------------------


@dataclass
class ScanRecord:
    n: int
    skipped: bool
    psi: Optional[int]
    num_digits: Optional[int]
    den_digits: Optional[int]


class ScanReport(Report):
    record_type = ScanRecord


def _scan_one(alpha: PowerSum, beta: PowerSum, n: int) -> ScanRecord:
    b = beta(n)
    if b == 0:
        return ScanRecord(n, True, None, None, None)
    x = alpha(n) / b
    return ScanRecord(n, False, psi(x), len(str(abs(x.numerator))), len(str(x.denominator)))


def window_extremes(records: Sequence[ScanRecord], windows: int = 10) -> List[Dict[str, Any]]:
    """Min/max ``psi`` over ``windows`` contiguous, nearly equal slices of the records."""
    out = []
    k = len(records)
    windows = min(windows, k)
    for w in range(windows):
        chunk = records[w * k // windows : (w + 1) * k // windows]
        vals = [r.psi for r in chunk if not r.skipped]
        out.append(
            {
                "n_from": chunk[0].n,
                "n_to": chunk[-1].n,
                "min_psi": min(vals) if vals else None,
                "max_psi": max(vals) if vals else None,
            }
        )
    return out


def windowed_minima(records: Sequence[ScanRecord], width: int = 10, start: int = 0) -> List[int]:
    """``m_k = min psi(n)`` over ``start + width*k < n <= start + width*(k+1)``."""
    buckets: Dict[int, List[int]] = {}
    for r in records:
        if not r.skipped:
            buckets.setdefault((r.n - start - 1) // width, []).append(r.psi)
    return [min(buckets[k]) for k in sorted(buckets)]


def length_scan(alpha: PowerSum, beta: PowerSum, n_from: int, n_to: int, **config) -> ScanReport:
    if not beta:
        raise UndefinedQuotientError("beta must be nonzero")
    _check_range(n_from, n_to)
    records = _map_ordered(partial(_scan_one, alpha, beta), range(n_from, n_to + 1))
    cfg = {"alpha": render(alpha), "beta": render(beta), "n_from": n_from, "n_to": n_to}
    cfg.update(config)
    return ScanReport(cfg, records, {"windows": window_extremes(records)})


def multiplicatively_independent(a: int, b: int, max_exponent: int = 64) -> bool:
    """No ``a**i == b**j`` with ``1 <= i, j <= max_exponent``."""
    if a < 2 or b < 2:
        return False
    powers_of_b = {b**j for j in range(1, max_exponent + 1)}
    return not any(a**i in powers_of_b for i in range(1, max_exponent + 1))


def pourchet_scan(a: int, b: int, n_from: int, n_to: int) -> ScanReport:
    if a < 2 or b < 2 or math.gcd(a, b) != 1:
        raise DomainError(f"need coprime integers a, b > 1, got a={a}, b={b}")
    return length_scan(
        PowerSum.monomial(a), PowerSum.monomial(b), n_from, n_to, preset="pourchet", a=a, b=b
    )


def cor3_scan(a: int, b: int, n_from: int, n_to: int) -> ScanReport:
    if not multiplicatively_independent(a, b):
        raise DomainError(f"a={a} and b={b} are not multiplicatively independent")
    alpha = PowerSum([(a, 1), (1, -1)])
    beta = PowerSum([(b, 1), (1, -1)])
    return length_scan(alpha, beta, n_from, n_to, preset="cor3", a=a, b=b)


# -- Thue-type probe --------------------------------------------------------


@dataclass
class ThueRecord:
    n: int
    r: int
    p: int
    q: int
    delta: str
    exponent: float
    exponent_eps: float


class ThueProbeReport(Report):
    record_type = ThueRecord


def convergent_exponents(x: Fraction, q_bound: Optional[Fraction] = None):
    """Yield ``(r, p, q, delta, exponent)`` for convergents of ``x``.

    Only ``q >= 2`` and ``q < q_bound`` qualify, and the final convergent
    (``delta == 0``) is skipped.  ``exponent = -log|delta| / log q``.
    """
    for r, (p, q) in enumerate(convergents(cf_of_rational(x))):
        if q_bound is not None and not q < q_bound:
            break
        if q < 2:
            continue
        delta = abs(x - Fraction(p, q))
        if delta == 0:
            continue
        yield r, p, q, delta, -_log_abs(delta) / math.log(q)


def _thue_one(alpha: PowerSum, beta: PowerSum, q0: Fraction, eps: float, n: int) -> list:
    b = beta(n)
    if b == 0:
        return []
    x = alpha(n) / b
    out = []
    for r, p, q, delta, e in convergent_exponents(x, q0**n):
        e_eps = e - eps * n / math.log(q)
        out.append(ThueRecord(n, r, p, q, f"{delta.numerator}/{delta.denominator}", _fmt(e), _fmt(e_eps)))
    return out


def thue_probe(
    alpha: PowerSum, beta: PowerSum, n_from: int, n_to: int, q0=Fraction(2), eps: float = 0.0
) -> ThueProbeReport:
    """Measured approximation exponents of convergents with ``q < q0**n``.

    For a convergent ``p/q`` of ``x = alpha(n)/beta(n)`` with ``delta = |x - p/q|``
    the record holds ``exponent = -log(delta)/log(q)`` and
    ``exponent_eps = (-log(delta) - eps*n)/log(q)``, the least ``k`` with
    ``delta >= q**-k * exp(-eps*n)``.
    """
    q0 = Fraction(q0)
    if q0 <= 1:
        raise DomainError(f"probe bound base q0 must exceed 1, got {q0}")
    if not beta:
        raise UndefinedQuotientError("beta must be nonzero")
    _check_range(n_from, n_to)
    if alpha.is_in_E() and beta.is_in_E():
        step = "exists" if try_divide(alpha, beta).exists else "none"
    else:
        step = "not-applicable"
    chunks = _map_ordered(partial(_thue_one, alpha, beta, q0, eps), range(n_from, n_to + 1))
    records = [rec for chunk in chunks for rec in chunk]
    per_n: Dict[int, float] = {}
    for rec in records:
        per_n[rec.n] = max(per_n.get(rec.n, rec.exponent), rec.exponent)
    cfg = {
        "alpha": render(alpha),
        "beta": render(beta),
        "n_from": n_from,
        "n_to": n_to,
        "q0": str(q0),
        "eps": eps,
        "euclid_step": step,
    }
    summary = {
        "per_n_max_exponent": [{"n": n, "max_exponent": e} for n, e in sorted(per_n.items())],
        "sup_exponent": max(per_n.values()) if per_n else None,
    }
    return ThueProbeReport(cfg, records, summary)


# -- denominator probe ------------------------------------------------------


@dataclass
class DenomRecord:
    n: int
    denominator: int
    clearing_base: int
    ratio: float


class DenomProbeReport(Report):
    record_type = DenomRecord


def _denom_one(zeta: PowerSum, D: int, n: int) -> DenomRecord:
    den = zeta(n).denominator
    ratio = 1.0 if D == 1 else _fmt(math.log(den) / (n * math.log(D)))
    return DenomRecord(n, den, D, ratio)


def denom_probe(zeta: PowerSum, n_from: int, n_to: int) -> DenomProbeReport:
    """Denominator of ``zeta(n)`` against ``D**n`` with ``D`` the clearing denominator.

    ``ratio = log(den) / (n log D)``, defined as 1 when ``D == 1``.
    """
    if not zeta:
        raise DomainError("zeta must be nonzero")
    _check_range(n_from, n_to)
    D = min_clearing_denominator(zeta)
    records = _map_ordered(partial(_denom_one, zeta, D), range(n_from, n_to + 1))
    cfg = {"zeta": render(zeta), "n_from": n_from, "n_to": n_to, "clearing_base": D}
    return DenomProbeReport(cfg, records, {"min_ratio": min(r.ratio for r in records)})
