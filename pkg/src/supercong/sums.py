"""Truncated sums modulo prime powers.

Every engine here walks a sum term by term with an O(1) update of the
term ratio, extracting p-valuations from the integer factors of that
ratio so that divisions only ever hit units.  Per-prime state (inverse
tables, the triple-binomial sequence, the quadratic character table) is
built once per (p, e) and cached.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .modarith import PrimePower, inv_mod, jacobi
from .verdicts import NotApplicable

__all__ = [
    "SumSpec",
    "PrimeContext",
    "context",
    "resolve_upper",
    "franel_sequence",
    "zp_sum",
    "factorial_sum",
    "genbinom_sum",
    "weighted_sum",
    "legendre_poly_eval",
    "cubic_char_sum",
    "central3_identity_check",
    "pattern_terms",
    "FACTORIAL_SHAPES",
]

# Term ratio term_k / term_{k-1} for each factorial family, written as
# const * prod(num linear forms in k) / prod(den linear forms in k).
# Denominator forms stay below p on every admissible index range, so they
# are always unit divisions; numerator forms may carry p-valuations.
_PATTERNS = {
    "QUARTIC": (8, ((4, -3), (2, -1), (4, -1)), ((1, 0),) * 3),
    "SEXTIC": (8, ((6, -5), (6, -3), (6, -1)), ((1, 0),) * 3),
    "SIX3K": (8, ((6, -5), (6, -3), (6, -1)), ((1, 0),) * 3),
    "CENTRAL3": (8, ((2, -1),) * 3, ((1, 0),) * 3),
    "CUBE2K3K": (6, ((2, -1), (3, -2), (3, -1)), ((1, 0),) * 3),
    "BINOM63SQ": (
        64,
        ((6, -5), (6, -5), (6, -3), (6, -3), (6, -1), (6, -1)),
        ((3, -2), (3, -2), (3, -1), (3, -1), (3, 0), (3, 0)),
    ),
}

# Factorial-quotient shape of term k per family: (numerator factorials,
# denominator factorials), entries are multiples of k.  Used by the exact
# per-term oracle to cross-check the incremental ratio walk.
FACTORIAL_SHAPES = {
    "QUARTIC": ((4,), (1, 1, 1, 1)),
    "SEXTIC": ((6,), (3, 1, 1, 1)),
    "SIX3K": ((6,), (3, 1, 1, 1)),
    "CENTRAL3": ((2, 2, 2), (1, 1, 1, 1, 1, 1)),
    "CUBE2K3K": ((2, 3), (1, 1, 1, 1, 1)),
    "BINOM63SQ": ((6, 6), (3, 3, 3, 3)),
}

_UPPER_CODES = ("p-1", "(p-1)/2", "(p-1)/6", "(p-5)/6", "[p/6]")


@dataclass(frozen=True)
class SumSpec:
    """One truncated sum: a term family, its base m, and bookkeeping.

    family selects the term pattern; m is the base of m^k (pass the full
    cube when the displayed base is written m0^{3k}).  r1, r2 carry the
    rational upper arguments of generalized binomial sums, weight holds a
    linear (a, b) factor meaning a*k+b, and upper names the index bound.
    """

    family: str
    m: int = 1
    r1: Optional[Fraction] = None
    r2: Optional[Fraction] = None
    weight: Optional[Tuple[int, int]] = None
    upper: str = "p-1"

    def __post_init__(self):
        if self.upper not in _UPPER_CODES:
            raise ValueError(f"unknown upper bound code {self.upper!r}")


def resolve_upper(code: str, p: int) -> int:
    if code == "p-1":
        return p - 1
    if code == "(p-1)/2":
        return (p - 1) // 2
    if code == "(p-1)/6":
        return (p - 1) // 6
    if code == "(p-5)/6":
        return (p - 5) // 6
    if code == "[p/6]":
        return p // 6
    raise ValueError(f"unknown upper bound code {code!r}")


class PrimeContext:
    """Immutable per-(p, e) evaluation state, built lazily.

    inv[k] is the inverse of k mod p^e for 1 <= k < p.  franel() returns
    f_n = sum_k C(n,k)^3 mod p^e for n < p.  chi() is the quadratic
    character table mod p.  Instances are shareable across concurrent
    checks; nothing mutates after first construction of each table.
    """

    __slots__ = ("pp", "_inv", "_franel", "_chi")

    def __init__(self, pp: PrimePower):
        self.pp = pp
        self._inv = None
        self._franel = None
        self._chi = None

    @property
    def inv(self):
        if self._inv is None:
            p, pe = self.pp.p, self.pp.m
            # batch inversion: one pow, O(p) multiplications
            pref = [1] * p
            r = 1
            for k in range(1, p):
                r = r * k % pe
                pref[k] = r
            inv = [0] * p
            run = pow(r, -1, pe)
            for k in range(p - 1, 0, -1):
                inv[k] = run * pref[k - 1] % pe
                run = run * k % pe
            self._inv = inv
        return self._inv

    def franel(self):
        if self._franel is None:
            p, pe = self.pp.p, self.pp.m
            inv = self.inv
            f = [0] * p
            f[0] = 1 % pe
            if p > 1:
                f[1] = 2 % pe
            for n in range(1, p - 1):
                i = inv[n + 1]
                f[n + 1] = (
                    ((7 * n * n + 7 * n + 2) * f[n] + 8 * n * n * f[n - 1])
                    * i % pe * i % pe
                )
            self._franel = f
        return self._franel

    def chi(self):
        if self._chi is None:
            p = self.pp.p
            chi = [-1] * p
            chi[0] = 0
            for i in range(1, (p - 1) // 2 + 1):
                chi[i * i % p] = 1
            self._chi = chi
        return self._chi


@lru_cache(maxsize=8)
def context(p: int, e: int = 1) -> PrimeContext:
    return PrimeContext(PrimePower(p, e))


def pattern_terms(ctx: PrimeContext, family: str, xstep: int, upper: int):
    """Yield (k, nu, unit) for term_k = p^nu * unit of family * xstep^k.

    xstep is the extra unit multiplier applied once per step (usually
    inv(m), but callers may pass any unit, e.g. m/(m-16)^3 directly).
    Terms whose valuation exceeds e are still walked in full so the unit
    state never degrades; valuations never decrease within a family since
    only numerator factors can carry p.
    """
    pp = ctx.pp
    p, pe = pp.p, pp.m
    const, nums, dens = _PATTERNS[family]
    for (da, db) in dens:
        if da * upper + db >= p:
            raise ValueError(
                f"upper bound {upper} exceeds the unit-division range "
                f"of family {family} at p={p}")
    inv = ctx.inv
    cnu = 0
    cu = const
    while cu % p == 0:
        cu //= p
        cnu += 1
    cu = cu * xstep % pe
    nu = 0
    unit = 1
    yield 0, 0, 1
    for k in range(1, upper + 1):
        nu += cnu
        u = unit * cu % pe
        for (fa, fb) in nums:
            f = fa * k + fb
            while f % p == 0:
                f //= p
                nu += 1
            u = u * f % pe
        for (da, db) in dens:
            u = u * inv[da * k + db] % pe
        unit = u
        yield k, nu, unit


def _pattern_sum(ctx: PrimeContext, family: str, xstep: int, upper: int,
                 weight: Optional[Tuple[int, int]] = None) -> int:
    pp = ctx.pp
    e, pe = pp.e, pp.m
    acc = 0
    if weight is None:
        for _, nu, unit in pattern_terms(ctx, family, xstep, upper):
            if nu < e:
                acc = (acc + pp.p ** nu * unit) % pe
    else:
        a, b = weight
        for k, nu, unit in pattern_terms(ctx, family, xstep, upper):
            if nu < e:
                acc = (acc + (a * k + b) * pp.p ** nu * unit) % pe
    return acc


def franel_sequence(pp: PrimePower) -> list:
    """f_n = sum_k C(n,k)^3 mod p^e for n = 0..p-1."""
    return list(context(pp.p, pp.e).franel())


def _zp_engine(ctx: PrimeContext, m: int,
               weight: Optional[Tuple[int, int]] = None) -> int:
    pp = ctx.pp
    p, e, pe = pp.p, pp.e, pp.m
    if m % p == 0:
        raise NotApplicable(f"p={p} divides the base m={m}")
    fr = ctx.franel()
    inv = ctx.inv
    xstep = inv_mod(m, pp)
    a, b = weight if weight is not None else (0, 1)
    acc = b % pe
    nu = 0
    unit = 1
    xpow = 1
    for n in range(1, p):
        f = 2 * (2 * n - 1)
        while f % p == 0:
            f //= p
            nu += 1
        unit = unit * f % pe * inv[n] % pe
        xpow = xpow * xstep % pe
        if nu < e:
            t = p ** nu * unit * xpow % pe * fr[n] % pe
            if weight is not None:
                t = t * (a * n + b) % pe
            acc = (acc + t) % pe
    return acc


def zp_sum(m: int, pp: PrimePower) -> int:
    """sum_{n<p} C(2n,n)/m^n * sum_k C(n,k)^3 mod p^e."""
    return _zp_engine(context(pp.p, pp.e), m)


def factorial_sum(spec: SumSpec, pp: PrimePower) -> int:
    """Evaluate a factorial-quotient family sum mod p^e."""
    if spec.family == "ZP":
        return _zp_engine(context(pp.p, pp.e), spec.m, spec.weight)
    if spec.family not in _PATTERNS:
        raise ValueError(f"family {spec.family!r} has no factorial pattern")
    if spec.m % pp.p == 0:
        raise NotApplicable(f"p={pp.p} divides the base m={spec.m}")
    ctx = context(pp.p, pp.e)
    xstep = inv_mod(spec.m, pp)
    upper = resolve_upper(spec.upper, pp.p)
    return _pattern_sum(ctx, spec.family, xstep, upper, spec.weight)


def weighted_sum(spec: SumSpec, pp: PrimePower) -> int:
    """sum (a*k+b) * term_k for the spec's family; weight (0,1) degenerates
    to the plain sum.  WEIGHTED is accepted as an alias for a weighted ZP
    spec."""
    family = "ZP" if spec.family == "WEIGHTED" else spec.family
    if spec.weight is None:
        spec = SumSpec(family, spec.m, spec.r1, spec.r2, (0, 1), spec.upper)
    else:
        spec = SumSpec(family, spec.m, spec.r1, spec.r2, spec.weight, spec.upper)
    return factorial_sum(spec, pp)


def genbinom_sum(r, s, x, pp: PrimePower, upper: int) -> int:
    """sum_{k<=upper} C(r,k) C(s,k) x^k mod p^e for rational r, s, x.

    Binomials are built through C(r,k+1) = C(r,k)(r-k)/(k+1); the only
    divisions are by k+1 <= upper < p and by the (unit) denominators of r,
    s and x, so plain residue arithmetic is exact p-adically.
    """
    p, pe = pp.p, pp.m
    r = Fraction(r)
    s = Fraction(s)
    x = Fraction(x)
    for d in (r.denominator, s.denominator, x.denominator):
        if d % p == 0:
            raise NotApplicable(f"p={p} divides a parameter denominator")
    if not 0 <= upper < p:
        raise ValueError("upper bound must lie in [0, p)")
    ctx = context(p, pp.e)
    inv = ctx.inv
    rn, rd = r.numerator % pe, r.denominator
    sn, sd = s.numerator % pe, s.denominator
    ird = pow(rd, -1, pe)
    isd = pow(sd, -1, pe)
    xr = x.numerator * pow(x.denominator, -1, pe) % pe
    br = bs = xpow = 1
    acc = 1 % pe
    for k in range(upper):
        br = br * ((rn - k * rd) % pe) % pe * ird % pe * inv[k + 1] % pe
        bs = bs * ((sn - k * sd) % pe) % pe * isd % pe * inv[k + 1] % pe
        xpow = xpow * xr % pe
        acc = (acc + br * bs % pe * xpow) % pe
    return acc


def legendre_poly_eval(n: int, t: int, p: int) -> int:
    """P_n(t) mod p by the three-term recurrence; n < p."""
    if not 0 <= n < p:
        raise ValueError("degree must lie in [0, p)")
    t %= p
    if n == 0:
        return 1 % p
    inv = context(p, 1).inv
    prev, cur = 1, t
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * t * cur - k * prev) * inv[k + 1] % p
    return cur


def cubic_char_sum(a: int, b: int, p: int) -> int:
    """sum_x ((x^3 + a x + b)/p), an integer in [-p, p]."""
    chi = context(p, 1).chi()
    a %= p
    b %= p
    tot = 0
    for x in range(p):
        tot += chi[(x * x % p * x + a * x + b) % p]
    return tot


def central3_identity_check(m: int, p: int) -> bool:
    """Check the proven four-way mod-p identity tying the central-cube sum
    to a Legendre polynomial square, a cubic character sum square, and the
    two truncations of the C(2k,k)C(3k,k)C(6k,3k) sum.  False means a bug.
    """
    if p <= 3:
        raise NotApplicable("requires p > 3")
    if m % p in (0, 16 % p, 64 % p):
        raise NotApplicable(f"m={m} is 0, 16 or 64 mod p={p}")
    pp = PrimePower(p, 1)
    ctx = context(p, 1)
    e1 = _pattern_sum(ctx, "CENTRAL3", inv_mod(m, pp), (p - 1) // 2)
    t = (m + 64) * inv_mod(m - 64, pp) % p
    j64 = jacobi(m * (m - 64), p)
    e2 = j64 * pow(legendre_poly_eval(p // 4, t, p), 2, p) % p
    a = -3 * inv_mod(2, pp) * (3 * t + 5) % p
    b = (9 * t + 7) % p
    s = cubic_char_sum(a, b, p)
    e3 = j64 * s * s % p
    j16 = jacobi(m * (m - 16), p)
    xstep = m * inv_mod((m - 16) ** 3, pp) % p
    e4 = j16 * _pattern_sum(ctx, "SIX3K", xstep, p // 6) % p
    e5 = j16 * _pattern_sum(ctx, "SIX3K", xstep, p - 1) % p
    return e1 == e2 == e3 == e4 == e5
