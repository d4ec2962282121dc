"""Exact power-sum arithmetic and continued fractions of power-sum quotients."""
from .approx import ApproxCertificate, approximate_quotient
from .cfrac import RationalCF, cf_of_rational, convergents, psi, reconstruct
from .errors import (
    DegenerateExpansionError,
    DomainError,
    InvalidRootError,
    InvalidThresholdError,
    NonpositiveBaseError,
    ParseError,
    ReccfError,
    UndefinedQuotientError,
    ZeroDenominatorError,
)
from .euclid import DivisionOutcome, NoExpansion, SymbolicCF, absorb_constants, cf_expand, fold, try_divide
from .experiments import denom_probe, length_scan, thue_probe
from .expr import parse_power_sum, render
from .powersum import (
    PowerSum,
    add,
    ell,
    evaluate,
    integer_root_subsum,
    is_in_E,
    min_clearing_denominator,
    mul,
    neg,
    normalize,
    scale,
    scale_roots,
    sub,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxCertificate",
    "approximate_quotient",
    "RationalCF",
    "cf_of_rational",
    "convergents",
    "psi",
    "reconstruct",
    "DegenerateExpansionError",
    "DomainError",
    "InvalidRootError",
    "InvalidThresholdError",
    "NonpositiveBaseError",
    "ParseError",
    "ReccfError",
    "UndefinedQuotientError",
    "ZeroDenominatorError",
    "DivisionOutcome",
    "NoExpansion",
    "SymbolicCF",
    "absorb_constants",
    "cf_expand",
    "fold",
    "try_divide",
    "denom_probe",
    "length_scan",
    "thue_probe",
    "parse_power_sum",
    "render",
    "PowerSum",
    "add",
    "ell",
    "evaluate",
    "integer_root_subsum",
    "is_in_E",
    "min_clearing_denominator",
    "mul",
    "neg",
    "normalize",
    "scale",
    "scale_roots",
    "sub",
]
