"""Verification engine for congruence statements about primes.

Three statement families share one harness: power residue criteria tied to
binary quadratic form representations, Lucas sequence values and
central-binomial Lucas sums, and truncated binomial / factorial-quotient
sums mod p, p^2 or p^3.  `check` evaluates one statement at one prime,
`sweep` runs statement sets over prime ranges, and `reference` recomputes
the modular machinery with exact big-rational arithmetic.
"""
from .verdicts import Anomaly, NotApplicable, Status, Verdict
from .modarith import PrimePower, inv_mod, jacobi, pow_mod
from .primes import is_prime, primes_in_range, sieve
from .quadform import QuadRep, represent, two_squares_normalized
from .lucas import LucasPair, lucas_stream, lucas_uv
from .sums import SumSpec, factorial_sum, genbinom_sum
from .reference import OracleReport, run_suite
from .registry import (
    ConjectureInstance,
    Grids,
    Statement,
    catalog,
    check,
    get_statement,
    instances_for,
    summarize,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Anomaly",
    "ConjectureInstance",
    "Grids",
    "LucasPair",
    "NotApplicable",
    "OracleReport",
    "PrimePower",
    "QuadRep",
    "Statement",
    "Status",
    "SumSpec",
    "Verdict",
    "catalog",
    "check",
    "factorial_sum",
    "genbinom_sum",
    "get_statement",
    "instances_for",
    "inv_mod",
    "is_prime",
    "jacobi",
    "lucas_stream",
    "lucas_uv",
    "pow_mod",
    "primes_in_range",
    "represent",
    "run_suite",
    "sieve",
    "summarize",
    "sweep",
    "two_squares_normalized",
    "__version__",
]
