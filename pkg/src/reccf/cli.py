"""Command-line interface: ``reccf <subcommand> [options]``.

Every subcommand writes a report (``--format json`` by default, or ``csv``) to
stdout or ``--out``.  Exit status is 0 on success, 1 for usage errors
(including malformed expressions) and 2 for domain errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import experiments as ex
from .approx import approximate_quotient
from .cfrac import cf_of_rational, convergents
from .errors import ParseError, ReccfError
from .euclid import NoExpansion, cf_expand, try_divide
from .expr import parse_power_sum, render

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _expr(flag: str):
    def convert(text: str):
        try:
            return parse_power_sum(text)
        except ParseError as e:
            raise UsageError(f"{flag}: {e.message} at position {e.position} in {text!r}") from None

    return convert


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


# Flat record types for the one-shot subcommands -----------------------------


@dataclass
class EvalRecord:
    expr: str
    n: int
    value: str


@dataclass
class EllRecord:
    expr: str
    ell: str


@dataclass
class CFRecord:
    r: int
    a: int
    p: int
    q: int


@dataclass
class Lemma1Record:
    eta: str
    truncation_order: int
    residual_valuation: str
    threshold: str


@dataclass
class DivideRecord:
    status: str
    quotient: Optional[str]
    remainder: Optional[str]
    refutation_root: Optional[str]


@dataclass
class CFExpandRecord:
    status: str
    index: Optional[int]
    quotient: Optional[str]
    refutation_step: Optional[int]
    refutation_root: Optional[str]


def _report(record_type, config, records, summary=None) -> ex.Report:
    cls = type(f"{record_type.__name__}Report", (ex.Report,), {"record_type": record_type})
    return cls(config, records, summary or {})


def _cmd_eval(a):
    return _report(EvalRecord, {"expr": render(a.expr), "n": a.n}, [EvalRecord(render(a.expr), a.n, str(a.expr(a.n)))])


def _cmd_ell(a):
    return _report(EllRecord, {"expr": render(a.expr)}, [EllRecord(render(a.expr), str(a.expr.ell))])


def _cmd_cf(a):
    cf = cf_of_rational(a.x)
    rows = [CFRecord(r, q_r, *pq) for r, (q_r, pq) in enumerate(zip(cf.quotients, convergents(cf)))]
    return _report(CFRecord, {"x": str(a.x)}, rows, {"psi": len(cf)})


def _cmd_lemma1(a):
    cert = approximate_quotient(a.alpha, a.beta, a.t)
    row = Lemma1Record(render(cert.eta), cert.truncation_order, str(cert.residual_valuation), str(cert.threshold))
    return _report(Lemma1Record, {"alpha": render(a.alpha), "beta": render(a.beta), "t": str(a.t)}, [row])


def _cmd_divide(a):
    out = try_divide(a.alpha, a.beta)
    if out.exists:
        row = DivideRecord("quotient", render(out.quotient), render(out.remainder), None)
    else:
        row = DivideRecord("refuted", None, None, str(out.refutation))
    return _report(DivideRecord, {"alpha": render(a.alpha), "beta": render(a.beta)}, [row])


def _cmd_cf_expand(a):
    result = cf_expand(a.alpha, a.beta)
    config = {"alpha": render(a.alpha), "beta": render(a.beta)}
    if isinstance(result, NoExpansion):
        rows = [CFExpandRecord("no-expansion", None, None, result.step, str(result.root))]
    else:
        rows = [CFExpandRecord("expansion", i, render(z), None, None) for i, z in enumerate(result)]
    return _report(CFExpandRecord, config, rows)


def _cmd_scan(a):
    return ex.length_scan(a.alpha, a.beta, a.n_from, a.n_to)


def _cmd_pourchet(a):
    return ex.pourchet_scan(a.a, a.b, a.n_from, a.n_to)


def _cmd_cor3(a):
    return ex.cor3_scan(a.a, a.b, a.n_from, a.n_to)


def _cmd_thue(a):
    return ex.thue_probe(a.alpha, a.beta, a.n_from, a.n_to, a.q0, a.eps)


def _cmd_denom(a):
    return ex.denom_probe(a.zeta, a.n_from, a.n_to)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reccf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, handler, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(handler=handler)
        return p

    def pair(p):
        p.add_argument("--alpha", type=_expr("--alpha"), required=True)
        p.add_argument("--beta", type=_expr("--beta"), required=True)

    def n_range(p, lo=1, hi=100):
        p.add_argument("--n-from", type=int, default=lo)
        p.add_argument("--n-to", type=int, default=hi)

    p = command("eval", _cmd_eval, "evaluate a power sum at n")
    p.add_argument("--expr", type=_expr("--expr"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = command("ell", _cmd_ell, "largest root of a power sum")
    p.add_argument("--expr", type=_expr("--expr"), required=True)

    p = command("cf", _cmd_cf, "continued fraction and convergents of a rational")
    p.add_argument("--x", type=_rational, required=True)

    p = command("lemma1", _cmd_lemma1, "approximate quotient eta with ell(alpha - eta*beta) < t")
    pair(p)
    p.add_argument("--t", type=_rational, required=True)

    pair(command("divide", _cmd_divide, "Euclid step over integer-root power sums"))
    pair(command("cf-expand", _cmd_cf_expand, "continued fraction of alpha/beta over power sums"))

    p = command("scan", _cmd_scan, "psi(alpha(n)/beta(n)) over a range of n")
    pair(p)
    n_range(p)

    for name, handler, text in (
        ("pourchet", _cmd_pourchet, "length scan of (a/b)^n for coprime a, b > 1"),
        ("cor3", _cmd_cor3, "length scan of (a^n-1)/(b^n-1), a and b multiplicatively independent"),
    ):
        p = command(name, handler, text)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        n_range(p)

    p = command("thue", _cmd_thue, "measured approximation exponents of convergents")
    pair(p)
    n_range(p, hi=60)
    p.add_argument("--q0", type=_rational, default=Fraction(2))
    p.add_argument("--eps", type=float, default=0.0)

    p = command("denom", _cmd_denom, "denominator growth of zeta(n)")
    p.add_argument("--zeta", type=_expr("--zeta"), required=True)
    n_range(p)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        ex.worker_count()
    except (UsageError, ValueError) as e:
        print(f"reccf: error: {e}", file=stderr)
        return EXIT_USAGE

    try:
        report = args.handler(args)
    except (ReccfError, ZeroDivisionError) as e:
        print(f"reccf: error: {e}", file=stderr)
        return EXIT_DOMAIN

    text = report.to_csv() if args.format == "csv" else report.to_json()
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
