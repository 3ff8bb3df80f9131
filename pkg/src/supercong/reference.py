"""Slow, independent reference computations gating the fast engines.

Everything here recomputes from first principles: exact Fraction sums,
math.comb factorial products, naive linear recurrences.  The suites
compare those against the incremental mod-p^e engines and report every
mismatch; a non-empty mismatch list always means a bug in a fast path
(or in this file), never new mathematics.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .lucas import lucas_stream, lucas_uv
from .modarith import PrimePower, factorial_quotient
from .primes import primes_in_range
from .registry import ORACLE_GENBINOM_SPECS, ORACLE_SUM_SPECS
from .sums import (
    FACTORIAL_SHAPES,
    SumSpec,
    central3_identity_check,
    factorial_sum,
    franel_sequence,
    genbinom_sum,
    pattern_terms,
    context,
    resolve_upper,
)

__all__ = [
    "OracleReport",
    "SUITES",
    "exact_binom",
    "exact_factorial_sum",
    "exact_franel",
    "exact_genbinom_sum",
    "exact_lucas_pair",
    "fraction_mod",
    "run_suite",
    "suite_factorial",
    "suite_franel",
    "suite_identity",
    "suite_lucas",
    "suite_sums",
]


@dataclass
class OracleReport:
    """Outcome of one brute-force equivalence suite."""

    suite: str
    checks: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, cond: bool, label: str) -> None:
        self.checks += 1
        if not cond:
            self.mismatches.append(label)

    def summary(self) -> str:
        verdict = "pass" if self.ok else f"FAIL ({len(self.mismatches)} mismatches)"
        return f"oracle {self.suite}: {self.checks} checks, {verdict}"


def fraction_mod(q: Fraction, modulus: int) -> int:
    """Reduce an exact rational with unit denominator mod p^e."""
    return q.numerator * pow(q.denominator, -1, modulus) % modulus


@lru_cache(maxsize=None)
def exact_franel(n: int) -> int:
    return sum(math.comb(n, k) ** 3 for k in range(n + 1))


def exact_binom(r: Fraction, k: int) -> Fraction:
    num = Fraction(1)
    for j in range(k):
        num *= r - j
    return num / math.factorial(k)


def exact_lucas_pair(b: int, c: int, n: int) -> tuple:
    """(U_n, V_n) over the integers, plain linear recurrence."""
    u0, u1 = 0, 1
    v0, v1 = 2, b
    for _ in range(n):
        u0, u1 = u1, b * u1 - c * u0
        v0, v1 = v1, b * v1 - c * v0
    return u0, v0


def _exact_shape_value(family: str, k: int) -> int:
    nums, dens = FACTORIAL_SHAPES[family]
    num = 1
    for c in nums:
        num *= math.factorial(c * k)
    den = 1
    for c in dens:
        den *= math.factorial(c * k)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{family} term {k} is not an integer")
    return q


def exact_factorial_sum(spec: SumSpec, p: int, e: int) -> int:
    """Fraction-exact evaluation of a factorial-family sum mod p^e."""
    pe = p**e
    a, b = spec.weight if spec.weight is not None else (0, 1)
    if spec.family == "ZP":
        total = Fraction(0)
        x = Fraction(1, spec.m)
        for n in range(p):
            term = math.comb(2 * n, n) * exact_franel(n) * (a * n + b)
            total += term * x**n
        return fraction_mod(total, pe)
    upper = resolve_upper(spec.upper, p)
    total = Fraction(0)
    x = Fraction(1, spec.m)
    for k in range(upper + 1):
        total += _exact_shape_value(spec.family, k) * (a * k + b) * x**k
    return fraction_mod(total, pe)


def exact_genbinom_sum(r, s, x, p: int, e: int, upper: int) -> int:
    """Fraction-exact sum of C(r,k) C(s,k) x^k for k <= upper, mod p^e."""
    r, s, x = Fraction(r), Fraction(s), Fraction(x)
    total = Fraction(0)
    for k in range(upper + 1):
        total += exact_binom(r, k) * exact_binom(s, k) * x**k
    return fraction_mod(total, p**e)


# ---------------------------------------------------------------------------
# suites


def suite_franel(bound: Optional[int] = None) -> OracleReport:
    """Franel recurrence table vs direct triple-binomial summation."""
    nmax = 60 if bound is None else bound
    rep = OracleReport("franel")
    for p in (5, 7, 13, 97):
        for e in (1, 2, 3):
            pe = p**e
            table = franel_sequence(PrimePower(p, e))
            top = p - 1 if p == 13 else min(nmax, p - 1)
            for n in range(top + 1):
                want = exact_franel(n) % pe
                rep.record(
                    table[n] == want,
                    f"franel p={p} e={e} n={n}: {table[n]} != {want}",
                )
    return rep


_LUCAS_PARAMS = ((1, -1), (2, -1), (3, 1), (4, 1), (3, -5), (6, 2), (5, 7))


def suite_lucas(bound: Optional[int] = None) -> OracleReport:
    """Fast doubling vs linear recurrence vs exact integer sequences."""
    nmax = 1000 if bound is None else bound
    rep = OracleReport("lucas")
    exact_cap = min(nmax, 240)
    for b, c in _LUCAS_PARAMS:
        for p, e in ((13, 3), (97, 2)):
            pp = PrimePower(p, e)
            pe = pp.m
            exact_u, exact_v = 0, 2
            nxt_u, nxt_v = 1, b
            for pair in lucas_stream(b, c, nmax, pp):
                dbl = lucas_uv(b, c, pair.n, pp)
                rep.record(
                    (dbl.u, dbl.v, dbl.cpow) == (pair.u, pair.v, pair.cpow),
                    f"lucas doubling (b,c)=({b},{c}) p^e={pe} n={pair.n}: "
                    f"{(dbl.u, dbl.v, dbl.cpow)} != {(pair.u, pair.v, pair.cpow)}",
                )
                if pair.n <= exact_cap:
                    rep.record(
                        (exact_u % pe, exact_v % pe) == (pair.u, pair.v),
                        f"lucas exact (b,c)=({b},{c}) p^e={pe} n={pair.n}",
                    )
                    exact_u, nxt_u = nxt_u, b * nxt_u - c * exact_u
                    exact_v, nxt_v = nxt_v, b * nxt_v - c * exact_v
    # classic sanity anchors
    rep.record(exact_lucas_pair(1, -1, 10) == (55, 123), "fibonacci/lucas n=10")
    rep.record(exact_lucas_pair(2, -1, 7) == (169, 478), "pell n=7")
    return rep


_QUOTIENT_SHAPES = (
    ("quartic", lambda n: ((4 * n,), (n, n, n, n)),
     lambda n: math.comb(4 * n, n) * math.comb(3 * n, n) * math.comb(2 * n, n)),
    ("sextic", lambda n: ((6 * n,), (3 * n, n, n, n)),
     lambda n: math.comb(6 * n, 3 * n) * math.comb(3 * n, n) * math.comb(2 * n, n)),
    ("central", lambda n: ((2 * n,), (n, n)), lambda n: math.comb(2 * n, n)),
)


def _factorial_grid(nmax: int):
    grid = list(range(0, min(nmax, 48) + 1))
    n = 49
    while n <= nmax:
        grid.append(n)
        n += 53
    if grid[-1] != nmax:
        grid.append(nmax)
    return grid


def suite_factorial(bound: Optional[int] = None) -> OracleReport:
    """factorial_quotient (valuation + unit walk) vs math.comb products.

    Deep grid (n up to the bound, default 2000) for p in {5, 13, 97} at
    e = 3; a shorter n <= 400 grid at e in {1, 2} for every p <= 97.  The
    grids are dense through n <= 48 and strided above, which crosses every
    carry/valuation regime (n spans many multiples of p^e for each p).
    """
    nmax = 2000 if bound is None else bound
    rep = OracleReport("factorial")
    deep = _factorial_grid(nmax)
    shallow = _factorial_grid(min(nmax, 400))
    cases = [(p, 3, deep) for p in (5, 13, 97)]
    cases += [(p, e, shallow) for p in primes_in_range(3, 98) for e in (1, 2)]
    for p, e, grid in cases:
        pp = PrimePower(p, e)
        pe = pp.m
        for i, n in enumerate(grid):
            name, shape, value = _QUOTIENT_SHAPES[i % len(_QUOTIENT_SHAPES)]
            nums, dens = shape(n)
            got = factorial_quotient(nums, dens, pp).value()
            want = value(n) % pe
            rep.record(
                got == want,
                f"factorial {name} n={n} p={p} e={e}: {got} != {want}",
            )
    return rep


def _sum_term_check(rep: OracleReport, spec: SumSpec, p: int, e: int) -> None:
    """Per-term gate: incremental ratio walk vs exact term values."""
    pe = p**e
    upper = resolve_upper(spec.upper, p)
    ctx = context(p, e)
    xstep = pow(spec.m, -1, pe)
    x = Fraction(1, spec.m)
    for k, nu, unit in pattern_terms(ctx, spec.family, xstep, upper):
        got = p**nu * unit % pe if nu < e else 0
        want = fraction_mod(_exact_shape_value(spec.family, k) * x**k, pe)
        rep.record(
            got == want,
            f"term {spec.family} m={spec.m} p={p} e={e} k={k}: {got} != {want}",
        )


def suite_sums(bound: Optional[int] = None) -> OracleReport:
    """Every catalog sum engine vs exact rational summation.

    Covers each factorial-family (family, m, weight, upper) tuple and each
    generalized-binomial (r1, r2, x) triple the catalog evaluates, for all
    odd primes p <= bound (default 37) and e in {1, 2, 3}, plus per-term
    gates for each family and the pinned spot values.
    """
    pmax = 37 if bound is None else bound
    rep = OracleReport("sums")
    ps = primes_in_range(5, pmax + 1)

    seen = set()
    for _, spec in ORACLE_SUM_SPECS:
        key = (spec.family, spec.m, spec.weight, spec.upper)
        if key in seen:
            continue
        seen.add(key)
        for p in ps:
            if spec.m % p == 0:
                continue
            for e in (1, 2, 3):
                pp = PrimePower(p, e)
                got = factorial_sum(spec, pp)
                want = exact_factorial_sum(spec, p, e)
                rep.record(
                    got == want,
                    f"sum {spec.family} m={spec.m} w={spec.weight} "
                    f"upper={spec.upper} p={p} e={e}: {got} != {want}",
                )

    term_seen = set()
    for _, spec in ORACLE_SUM_SPECS:
        if spec.family == "ZP" or spec.family in term_seen:
            continue
        term_seen.add(spec.family)
        for p, e in ((13, 3), (31, 2)):
            if spec.m % p:
                _sum_term_check(rep, spec, p, e)

    rng = random.Random("genbinom-grid")
    for _, r, s, x in ORACLE_GENBINOM_SPECS:
        dens = (
            Fraction(r).denominator
            * Fraction(s).denominator
            * Fraction(x).denominator
        )
        for p in ps:
            if dens % p == 0:
                continue
            uppers = {0, 1, (p - 1) // 2, p - 1, rng.randrange(p)}
            for e in (1, 2, 3):
                pp = PrimePower(p, e)
                for upper in sorted(uppers):
                    got = genbinom_sum(r, s, x, pp, upper)
                    want = exact_genbinom_sum(r, s, x, p, e, upper)
                    rep.record(
                        got == want,
                        f"genbinom r={r} s={s} x={x} p={p} e={e} "
                        f"upper={upper}: {got} != {want}",
                    )

    # pinned spot values, exact path first
    spots = (
        (SumSpec("ZP", -16), 5, 2, 17),
        (SumSpec("ZP", 16, weight=(5, 2)), 7, 2, 14),
        (SumSpec("SEXTIC", 1728), 13, 2, 10),
    )
    for spec, p, e, want in spots:
        exact = exact_factorial_sum(spec, p, e)
        fast = factorial_sum(spec, PrimePower(p, e))
        rep.record(exact == want, f"spot exact {spec.family} m={spec.m} p={p}: "
                                  f"{exact} != {want}")
        rep.record(fast == want, f"spot fast {spec.family} m={spec.m} p={p}: "
                                 f"{fast} != {want}")
    return rep


def suite_identity(bound: Optional[int] = None) -> OracleReport:
    """Proven four-way identity on seeded m samples for every p <= bound."""
    pmax = 200 if bound is None else bound
    rep = OracleReport("identity")
    for p in primes_in_range(5, pmax + 1):
        rng = random.Random(p)
        picked = 0
        while picked < 20:
            m = rng.randrange(-10**6, 10**6)
            if m % p in (0, 16 % p, 64 % p):
                continue
            picked += 1
            rep.record(
                central3_identity_check(m, p),
                f"identity m={m} p={p}",
            )
    return rep


SUITES = {
    "franel": suite_franel,
    "lucas": suite_lucas,
    "factorial": suite_factorial,
    "sums": suite_sums,
    "identity": suite_identity,
}


def run_suite(name: str, bound: Optional[int] = None) -> OracleReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown oracle suite {name!r}") from None
    return fn(bound)
