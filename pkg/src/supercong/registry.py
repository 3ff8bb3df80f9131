"""Catalog of checkable congruence statements and the sweep driver.

Each catalog entry maps a prime (plus optional auxiliary parameters) to a
verdict: the hypothesis is tested, required quadratic-form representations
are computed and normalized, the stated branch is selected, and the left
side (a power residue, a Lucas value, or a truncated sum) is compared with
the branch value at the statement's modulus.

Verdict semantics:
  Holds / Fails       the comparison at the stated modulus
  NotApplicable       hypothesis unmet: congruence class, p dividing a base,
                      or a "for some x, y" representation that does not exist
  Anomaly             hypothesis inconsistency: a representation the
                      statement asserts ("and so p = ...") is missing or
                      ambiguous, a sign exponent is not an integer, a zero
                      coordinate cannot be sign-normalized, or no (or
                      several) branch conditions match

Statements whose sign conventions are underdetermined (an unnormalized
coordinate, or several essentially different representations) are checked
against every admissible choice; the verdict is Holds when any choice
matches, and the diagnostics list the choices tried.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .lucas import lucas_stream, lucas_uv
from .modarith import PrimePower, inv_mod, jacobi
from .primes import is_prime, primes_in_range
from .quadform import delta, normalize_odd_part_sign, represent, two_squares_normalized
from .sums import SumSpec, central3_identity_check, context, factorial_sum, genbinom_sum
from .verdicts import Anomaly, NotApplicable, Status, Verdict

__all__ = [
    "ConjectureInstance",
    "Statement",
    "Grids",
    "catalog",
    "get_statement",
    "check",
    "sweep",
    "instances_for",
    "summarize",
    "ORACLE_SUM_SPECS",
    "ORACLE_GENBINOM_SPECS",
]

F = Fraction


@dataclass(frozen=True)
class ConjectureInstance:
    id: str
    p: int
    params: tuple = ()  # sorted (name, value) pairs

    def params_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class Statement:
    """Catalog descriptor: hypothesis, modulus exponent, display formula."""

    id: str
    group: str
    modexp: int
    applies: str
    formula: str
    params: tuple = ()
    proven: bool = False
    checker: Optional[Callable] = field(default=None, compare=False)


@dataclass(frozen=True)
class Grids:
    """Parameter grids used by sweeps over the quantified statements."""

    q_max: int = 100
    b_max: Optional[int] = None  # None: per-statement default
    k_max: int = 60
    m_values: tuple = (2, 3, 5)


# ---------------------------------------------------------------------------
# helpers shared by the checkers.  A checker returns (branch, links) or
# (branch, links, diags) where links are (label, lhs, rhs, modexp) tuples.


def _exactly_one(conds: Sequence[bool], what: str) -> int:
    hits = [i for i, c in enumerate(conds) if c]
    if len(hits) != 1:
        raise Anomaly(f"{what}: {len(hits)} branch conditions match")
    return hits[0]


def _reps(N: int, a: int, b: int) -> list:
    return [(r.x, r.y) for r in represent(N, a, b)]


def _rep_unique(N: int, a: int, b: int, required: bool, what: str) -> tuple:
    reps = _reps(N, a, b)
    if not reps:
        if required:
            raise Anomaly(f"no representation {what}")
        raise NotApplicable(f"no representation {what}")
    if len(reps) > 1:
        raise Anomaly(f"ambiguous representation {what}: {reps}")
    return reps[0]


def _rep_candidates(N: int, a: int, b: int, required: bool, what: str) -> list:
    """All essentially different nonnegative solutions; the caller evaluates
    every one, since the statements do not single one out when N = 2p or 4p
    admits several."""
    reps = _reps(N, a, b)
    if not reps:
        if required:
            raise Anomaly(f"no representation {what}")
        raise NotApplicable(f"no representation {what}")
    return reps


def _form_label(mult: int, a: int, b: int) -> str:
    head = {1: "p", 2: "2p", 4: "4p"}[mult]
    ax = "x^2" if a == 1 else f"{a}x^2"
    return f"{head} = {ax} + {b}y^2"


def _pin_sign(t: int, m: int, r: int, what: str) -> int:
    if t % m == r % m:
        return t
    if (-t) % m == r % m:
        return -t
    raise Anomaly(f"{what}: neither sign of {t} works")


def _guard_div(t: int, d: int, what: str) -> int:
    if t % d:
        raise Anomaly(f"exponent {what} is not an integer")
    return t // d


def _sgn_pow(exp: int) -> int:
    return -1 if exp % 2 else 1


def _inv(a: int, pp: PrimePower) -> int:
    return inv_mod(a, pp)


def _frac(num: int, den: int, p: int) -> int:
    return num * pow(den % p, -1, p) % p


def _two_squares(p: int) -> tuple:
    return two_squares_normalized(p)


def _odd_normalized(t: int) -> int:
    return normalize_odd_part_sign(t)


def _candidate_link(label: str, lhs: int, cands: list, e: int, p: int,
                    diags: list) -> tuple:
    """One link from possibly ambiguous right sides: Holds when any matches."""
    pe = p ** e
    if len(cands) > 1:
        diags.append(label + " candidates: " + "; ".join(
            f"{lab} -> {rhs % pe}" for lab, rhs in cands))
    for lab, rhs in cands:
        if (lhs - rhs) % pe == 0:
            return (f"{label} [{lab}]", lhs % pe, rhs % pe, e)
    lab, rhs = cands[0]
    return (f"{label} [{lab}]", lhs % pe, rhs % pe, e)


# ---------------------------------------------------------------------------
# power residue statements (modulus p)


def _power_lhs(base: int, p: int, shift: int) -> int:
    exp = _guard_div(p - shift, 8, f"(p-{shift})/8")
    return pow(base % p, exp, p)


def _check_t21(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 24 != 1:
        raise NotApplicable("p is not 1 mod 24")
    c, d = _two_squares(p)
    x, y = _rep_unique(p, 1, 3, True, "p = x^2 + 3y^2")
    t3 = (-1) ** (_guard_div(y, 4, "y/4") % 2) % 3
    lhs = _power_lhs(3, p, 1)
    if d % 3 == 0:
        idx = _exactly_one([c % 3 == t3, (-c) % 3 == t3], "c vs +-(-1)^(y/4) mod 3")
        branch = "c = %s(-1)^(y/4) mod 3" % ("+" if idx == 0 else "-")
        rhs = (1 if idx == 0 else -1) % p
    elif c % 3 == 0:
        idx = _exactly_one([d % 3 == t3, (-d) % 3 == t3], "d vs +-(-1)^(y/4) mod 3")
        branch = "d = %s(-1)^(y/4) mod 3" % ("+" if idx == 0 else "-")
        rhs = (1 if idx == 0 else -1) * _frac(d, c, p) % p
    else:
        raise Anomaly("neither c nor d is divisible by 3")
    return branch, [("3^((p-1)/8)", lhs, rhs, 1)]


def _check_21(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 24 != 13:
        raise NotApplicable("p is not 13 mod 24")
    c, d = _two_squares(p)
    xr, yr = _rep_unique(p, 1, 3, True, "p = x^2 + 3y^2")
    x, y = _odd_normalized(xr), _odd_normalized(yr)
    lhs = _power_lhs(3, p, 5)
    conds = [x % 3 == c % 3, x % 3 == (-c) % 3, x % 3 == d % 3, x % 3 == (-d) % 3]
    idx = _exactly_one(conds, "x vs +-c, +-d mod 3")
    branch = ["x = c mod 3", "x = -c mod 3", "x = d mod 3", "x = -d mod 3"][idx]
    rhs = [_frac(y, x, p), _frac(-y, x, p),
           _frac(-d * y, c * x, p), _frac(d * y, c * x, p)][idx]
    return branch, [("3^((p-5)/8)", lhs, rhs, 1)]


def _check_22(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 28 not in (1, 9, 25):
            raise NotApplicable("p is not 1, 9, 25 mod 28")
        want8 = 1 if part == "i" else 5
        if p % 8 != want8:
            raise NotApplicable(f"p is not {want8} mod 8")
        c, d = _two_squares(p)
        xr, yr = _rep_unique(p, 1, 7, True, "p = x^2 + 7y^2")
        x, y = _odd_normalized(xr), _odd_normalized(yr)
        conds = [c % 7 == 0, d % 7 == 0,
                 c % 7 != 0 and c % 7 == d % 7, c % 7 != 0 and c % 7 == (-d) % 7]
        idx = _exactly_one(conds, "7|c, 7|d, c = +-d mod 7")
        branch = ["7 | c", "7 | d", "c = d mod 7", "c = -d mod 7"][idx]
        if part == "i":
            s = _sgn_pow(_guard_div(y, 4, "y/4"))
            lhs = _power_lhs(7, p, 1)
            rhs = [(-s) % p, s % p, -s * _frac(d, c, p) % p,
                   s * _frac(d, c, p) % p][idx]
            return branch, [("7^((p-1)/8)", lhs, rhs, 1)]
        lhs = _power_lhs(7, p, 5)
        rhs = [_frac(-y, x, p), _frac(y, x, p),
               _frac(-d * y, c * x, p), _frac(d * y, c * x, p)][idx]
        return branch, [("7^((p-5)/8)", lhs, rhs, 1)]

    return checker


def _check_23(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 20 not in (1, 9):
            raise NotApplicable("p is not 1, 9 mod 20")
        want8 = 1 if part == "i" else 5
        if p % 8 != want8:
            raise NotApplicable(f"p is not {want8} mod 8")
        c, d = _two_squares(p)
        xr, yr = _rep_unique(p, 1, 5, True, "p = x^2 + 5y^2")
        x, y = _odd_normalized(xr), _odd_normalized(yr)
        conds = [x % 5 == c % 5, x % 5 == (-c) % 5,
                 x % 5 == d % 5, x % 5 == (-d) % 5]
        idx = _exactly_one(conds, "x vs +-c, +-d mod 5")
        branch = ["x = c mod 5", "x = -c mod 5", "x = d mod 5", "x = -d mod 5"][idx]
        if part == "i":
            e0 = _sgn_pow(_guard_div(d, 4, "d/4")) * delta(y)
            lhs = _power_lhs(5, p, 1)
            rhs = [e0, -e0, e0 * _frac(d, c, p), -e0 * _frac(d, c, p)][idx] % p
            return branch, [("5^((p-1)/8)", lhs, rhs, 1)]
        dx = delta(x)
        lhs = _power_lhs(5, p, 5)
        rhs = [dx * _frac(d * y, c * x, p), -dx * _frac(d * y, c * x, p),
               -dx * _frac(y, x, p), dx * _frac(y, x, p)][idx] % p
        return branch, [("5^((p-5)/8)", lhs, rhs, 1)]

    return checker


def _check_24(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 40 not in (1, 9):
        raise NotApplicable("p is not 1, 9 mod 40")
    c, d = _two_squares(p)
    xr, yr = _rep_unique(p, 1, 10, True, "p = x^2 + 10y^2")
    x = _pin_sign(xr, 4, 1, "x = 1 mod 4")
    e0 = _sgn_pow(_guard_div(d, 4, "d/4") + _guard_div(x - 1, 4, "(x-1)/4"))
    lhs = _power_lhs(5, p, 1)
    conds = [x % 5 == d % 5, x % 5 == (-d) % 5, x % 5 == c % 5, x % 5 == (-c) % 5]
    idx = _exactly_one(conds, "x vs +-d, +-c mod 5")
    branch = ["x = d mod 5", "x = -d mod 5", "x = c mod 5", "x = -c mod 5"][idx]
    rhs = [e0 * _frac(d, c, p), -e0 * _frac(d, c, p), e0, -e0][idx] % p
    return branch, [("5^((p-1)/8)", lhs, rhs, 1)]


def _check_25(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 52 not in (1, 9, 17, 25, 29, 49):
            raise NotApplicable("p is not 1, 9, 17, 25, 29, 49 mod 52")
        want8 = 1 if part == "i" else 5
        if p % 8 != want8:
            raise NotApplicable(f"p is not {want8} mod 8")
        c, d = _two_squares(p)
        xr, yr = _rep_unique(p, 1, 13, True, "p = x^2 + 13y^2")
        x, y = _odd_normalized(xr), _odd_normalized(yr)
        if x % 13 == 0:
            raise Anomaly("x is 0 mod 13")
        t = (2 * c + 3 * d) * pow(x, -1, 13) % 13
        if t == 0:
            raise Anomaly("(2c+3d)/x is 0 mod 13")
        idx = _exactly_one([t in (1, 3, 9), t in (12, 10, 4),
                            t in (2, 5, 6), t in (11, 8, 7)],
                           "(2c+3d)/x class mod 13")
        branch = ["(2c+3d)/x = 1,3,9 mod 13", "(2c+3d)/x = -1,-3,-9 mod 13",
                  "(2c+3d)/x = 2,5,6 mod 13", "(2c+3d)/x = -2,-5,-6 mod 13"][idx]
        if part == "i":
            e0 = _sgn_pow(_guard_div(d, 4, "d/4")) * delta(y)
            lhs = _power_lhs(13, p, 1)
            rhs = [-e0 * _frac(d, c, p), e0 * _frac(d, c, p), e0, -e0][idx] % p
            return branch, [("13^((p-1)/8)", lhs, rhs, 1)]
        dx = delta(x)
        lhs = _power_lhs(13, p, 5)
        rhs = [dx * _frac(y, x, p), -dx * _frac(y, x, p),
               dx * _frac(d * y, c * x, p), -dx * _frac(d * y, c * x, p)][idx] % p
        return branch, [("13^((p-5)/8)", lhs, rhs, 1)]

    return checker


def _check_26(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 4 != 1:
            raise NotApplicable("p is not 1 mod 4")
        want8 = 1 if part == "i" else 5
        if p % 8 != want8:
            raise NotApplicable(f"p is not {want8} mod 8")
        if p == 17:
            raise NotApplicable("p = 17 is excluded")
        xr, yr = _rep_unique(p, 1, 17, False, "p = x^2 + 17y^2")
        c, d = _two_squares(p)
        x, y = _odd_normalized(xr), _odd_normalized(yr)
        if x % 17 == 0:
            raise Anomaly("x is 0 mod 17")
        s = (4 * c + d) * pow(x, -1, 17) % 17
        groups = [(6, 11, 7, 10), (3, 14, 5, 12), (1, 16, 4, 13), (2, 15, 8, 9)]
        idx = _exactly_one([s in g for g in groups], "(4c+d)/x class mod 17")
        branch = ["4c+d = +-6x,+-7x mod 17", "4c+d = +-3x,+-5x mod 17",
                  "4c+d = +-x,+-4x mod 17", "4c+d = +-2x,+-8x mod 17"][idx]
        if part == "i":
            e0 = _sgn_pow(_guard_div(d, 4, "d/4") + _guard_div(x * y, 4, "xy/4"))
            lhs = _power_lhs(17, p, 1)
            rhs = [-e0 * _frac(d, c, p), e0 * _frac(d, c, p), e0, -e0][idx] % p
            return branch, [("17^((p-1)/8)", lhs, rhs, 1)]
        e0 = _sgn_pow(x)
        lhs = _power_lhs(17, p, 5)
        rhs = [e0 * _frac(y, x, p), -e0 * _frac(y, x, p),
               e0 * _frac(d * y, c * x, p), -e0 * _frac(d * y, c * x, p)][idx] % p
        return branch, [("17^((p-5)/8)", lhs, rhs, 1)]

    return checker


def _check_279(sid: str, part: str):
    qcls = {"2.7": (8, 3), "2.8": (16, 7), "2.9": (16, 15)}[sid]

    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        q = inst.params_dict()["q"]
        qm, qr = qcls
        if q <= 2 or q % qm != qr or not is_prime(q):
            raise NotApplicable(f"q is not a prime with q = {qr} mod {qm}")
        if p % 4 != 1 or p == q:
            raise NotApplicable("p is not 1 mod 4 distinct from q")
        want8 = 1 if part == "i" else 5
        if p % 8 != want8:
            raise NotApplicable(f"p is not {want8} mod 8")
        xr, yr = _rep_unique(p, 1, q, False, f"p = x^2 + {q}y^2")
        c, d = _two_squares(p)
        if c * d % q:
            raise NotApplicable(f"{q} does not divide cd")
        x, y = _odd_normalized(xr), _odd_normalized(yr)
        shift = 1 if part == "i" else 5
        lhs = _power_lhs(q, p, shift)
        label = f"{q}^((p-{shift})/8)"
        sy = _sgn_pow(_guard_div(y, 4, "y/4")) if part == "i" else None
        if sid == "2.9":
            rhs = sy % p if part == "i" else _frac(y, x, p)
            return "single case", [(label, lhs, rhs, 1)]
        if sid == "2.8":
            idx = _exactly_one([d % q == 0, c % q == 0], "q|d vs q|c")
            branch = ["q | d", "q | c"][idx]
            if part == "i":
                rhs = (sy if idx == 0 else -sy) % p
            else:
                rhs = _frac(y if idx == 0 else -y, x, p)
            return branch, [(label, lhs, rhs, 1)]
        conds = [x % q == c % q, x % q == (-c) % q,
                 x % q == d % q, x % q == (-d) % q]
        idx = _exactly_one(conds, "x vs +-c, +-d mod q")
        branch = ["x = c mod q", "x = -c mod q", "x = d mod q", "x = -d mod q"][idx]
        sq = _sgn_pow(_guard_div(q - 3, 8, "(q-3)/8"))
        if part == "i":
            rhs = [sy, -sy, -sq * sy * _frac(d, c, p),
                   sq * sy * _frac(d, c, p)][idx] % p
        else:
            rhs = [_frac(y, x, p), _frac(-y, x, p),
                   -sq * _frac(d * y, c * x, p), sq * _frac(d * y, c * x, p)][idx]
        return branch, [(label, lhs, rhs, 1)]

    return checker


def _setup_cd_xy(pp: PrimePower, N: int):
    """Hypotheses of the p = c^2+d^2 = x^2+Ny^2 family: p = 1 mod 4, the
    second form representable ("for some", so missing means NotApplicable),
    coordinates odd-part normalized."""
    p = pp.p
    if p % 4 != 1:
        raise NotApplicable("p is not 1 mod 4")
    if p == N:
        raise NotApplicable(f"p = {N} is excluded")
    xr, yr = _rep_unique(p, 1, N, False, f"p = x^2 + {N}y^2")
    c, d = _two_squares(p)
    return c, d, _odd_normalized(xr), _odd_normalized(yr)


def _check_210(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    b = inst.params_dict()["b"]
    if b % 2 == 0:
        raise NotApplicable("b is even")
    c, d, x, y = _setup_cd_xy(pp, b * b + 4)
    w = c * x * pow(d * y % p, -1, p) % p
    i2 = pow(2, -1, p)
    exp = _guard_div(p - 1, 4, "(p-1)/4")
    lp = pow((b + w) * i2 % p, exp, p)
    lm = pow((b - w) * i2 % p, exp, p)
    if (x * y) % 4:
        links = [("((b+cx/dy)/2)^((p-1)/4) = -((b-cx/dy)/2)^((p-1)/4)",
                  lp, -lm % p, 1)]
        if x % 4 == 2:
            sgn = -1 if b % 8 in (1, 3) else 1
            branch = "2 || x, b = %s mod 8" % ("1,3" if b % 8 in (1, 3) else "5,7")
            rhs = sgn * _sgn_pow(_guard_div(d, 4, "d/4")) * _frac(d, c, p) % p
        elif y % 4 == 2:
            branch = "2 || y"
            rhs = 1 % p
        else:
            raise Anomaly("4 does not divide xy yet neither 2||x nor 2||y")
        links.append(("value", lp, rhs, 1))
        return branch, links
    links = [("((b+cx/dy)/2)^((p-1)/4) = ((b-cx/dy)/2)^((p-1)/4)", lp, lm, 1)]
    if y % 4 == 0:
        branch = "4 | y"
        rhs = _sgn_pow(_guard_div(d + y, 4, "(d+y)/4")) % p
    elif x % 4 == 0:
        sgn = -1 if b % 8 in (1, 3) else 1
        branch = "4 | x, b = %s mod 8" % ("1,3" if b % 8 in (1, 3) else "5,7")
        rhs = sgn * _sgn_pow(_guard_div(x, 4, "x/4")) * _frac(d, c, p) % p
    else:
        raise Anomaly("4 | xy yet neither 4|x nor 4|y")
    links.append(("value", lp, rhs, 1))
    return branch, links


# ---------------------------------------------------------------------------
# Lucas sequence statements


def _check_31(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        b = inst.params_dict()["b"]
        if b % 2 == 0:
            raise NotApplicable("b is even")
        c, d, x, y = _setup_cd_xy(pp, b * b + 4)
        n = _guard_div(p - 1, 4, "(p-1)/4")
        pair = lucas_uv(b, -1, n, PrimePower(p, 1))
        if part == "i":
            if (x * y) % 4 == 0:
                raise NotApplicable("4 | xy (V case)")
            if x % 4 == 2:
                sgn = 1 if b % 8 in (1, 3) else -1
                branch = "2 || x, b = %s mod 8" % ("1,3" if b % 8 in (1, 3) else "5,7")
                rhs = sgn * _sgn_pow(_guard_div(d, 4, "d/4")) * _frac(2 * y, x, p) % p
            else:
                branch = "2 || y"
                rhs = _frac(2 * d * y, c * x, p)
            return branch, [("U_((p-1)/4)(b,-1)", pair.u, rhs, 1)]
        if (x * y) % 4:
            raise NotApplicable("4 does not divide xy (U case)")
        if y % 4 == 0:
            branch = "4 | y"
            rhs = 2 * _sgn_pow(_guard_div(d + y, 4, "(d+y)/4")) % p
        else:
            sgn = -1 if b % 8 in (1, 3) else 1
            branch = "4 | x, b = %s mod 8" % ("1,3" if b % 8 in (1, 3) else "5,7")
            rhs = 2 * sgn * _sgn_pow(_guard_div(x, 4, "x/4")) * _frac(d, c, p) % p
        return branch, [("V_((p-1)/4)(b,-1)", pair.v, rhs, 1)]

    return checker


def _check_324(sid: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        b = inst.params_dict()["b"]
        ok = {"3.2": b % 8 == 4, "3.3": b % 8 == 0, "3.4": b % 4 == 2}[sid]
        if not ok:
            raise NotApplicable("b is not in the stated residue class")
        c, d, x, y = _setup_cd_xy(pp, 1 + b * b // 4)
        n = _guard_div(p - 1, 4, "(p-1)/4")
        pair = lucas_uv(b, -1, n, PrimePower(p, 1))
        if sid == "3.2":
            if x % 4 == 2:
                bu, ru = "2 || x", _sgn_pow(
                    _guard_div(b + 4, 8, "(b+4)/8") + _guard_div(d, 4, "d/4")) \
                    * _frac(y, x, p) % p
            elif y % 4 == 2:
                bu, ru = "2 || y", _frac(d * y, c * x, p)
            else:
                bu, ru = "4 | xy", 0
            if y % 4 == 0:
                bv, rv = "4 | y", 2 * _sgn_pow(
                    _guard_div(d, 4, "d/4") + _guard_div(y, 4, "y/4")) % p
            elif x % 4 == 0:
                bv, rv = "4 | x", 2 * _sgn_pow(
                    _guard_div(b - 4, 8, "(b-4)/8") + _guard_div(x, 4, "x/4")) \
                    * _frac(d, c, p) % p
            else:
                bv, rv = "4 does not divide xy", 0
        elif sid == "3.3":
            b8 = b // 8
            if (x * y) % 4 == 0:
                bu, ru = "4 | xy", 0
                bv = "4 | xy"
                rv = 2 * _sgn_pow(_guard_div(d, 4, "d/4")
                                  + _guard_div(x * y, 4, "xy/4") + b8 * y) % p
            else:
                bu = "4 does not divide xy"
                ru = -_sgn_pow((b8 - 1) * y) * _frac(d * y, c * x, p) % p
                bv, rv = "4 does not divide xy", 0
        else:
            if y % 4 == 2:
                bu = "2 || y"
                ru = _sgn_pow(_guard_div(b - 2, 4, "(b-2)/4")
                              + _guard_div(d, 4, "d/4")) * _frac(y, x, p) % p
                bv, rv = "2 || y", 0
            elif y % 4 == 0:
                bu, ru = "4 | y", 0
                bv = "4 | y"
                rv = 2 * _sgn_pow(_guard_div(d, 4, "d/4")
                                  + _guard_div(y, 4, "y/4")) % p
            else:
                raise Anomaly("y is odd")
        return f"U: {bu}; V: {bv}", [("U_((p-1)/4)(b,-1)", pair.u, ru, 1),
                                     ("V_((p-1)/4)(b,-1)", pair.v, rv, 1)]

    return checker


def _lehmer_exp(p: int, y: int) -> int:
    v = (p - 1) // 2 * y
    return _guard_div(v * v - 1, 8, "(((p-1)/2 y)^2 - 1)/8")


def _check_35(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    k = inst.params_dict()["k"]
    if k % 2 == 0:
        raise NotApplicable("k is even")
    if (p + 1) % 4:
        raise NotApplicable("(p+1)/4 is not an integer (p = 1 mod 4)")
    cands = _rep_candidates(p, 1, k * k + 1, False, f"p = x^2 + {k * k + 1}y^2")
    n = (p + 1) // 4
    pair = lucas_uv(2 * k, -1, n, PrimePower(p, 1))
    sign0 = 1 if k % 8 in (5, 7) else -1
    branch = "k = %s mod 8" % ("5,7" if k % 8 in (5, 7) else "1,3")
    m2n = pow(-2 % p, n, p)
    diags = []
    vals = []
    for x, y in cands:
        if y % 2 == 0:
            raise Anomaly("y is even")
        vals.append((f"(x,y)=({x},{y})",
                     sign0 * _sgn_pow(_lehmer_exp(p, y)) * m2n % p))
    link = _candidate_link("V_((p+1)/4)(2k,-1)", pair.v, vals, 1, p, diags)
    return branch, [link], diags


def _check_36(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        k = inst.params_dict()["k"]
        want = (1, 3) if part == "i" else (5, 7)
        if k % 2 == 0 or k % 8 not in want:
            raise NotApplicable(f"k is not {want[0]},{want[1]} mod 8")
        if (p + 1) % 4:
            raise NotApplicable("(p+1)/4 is not an integer (p = 1 mod 4)")
        cands = _rep_candidates(2 * p, 1, k * k + 4, False,
                                f"2p = x^2 + {k * k + 4}y^2")
        n = (p + 1) // 4
        pair = lucas_uv(k, -1, n, PrimePower(p, 1))
        if part == "i":
            base = (-2) % p
            sign0 = 1 if k % 16 in (1, 11) else -1
            branch = "k = %s mod 16" % ("1,11" if k % 16 in (1, 11) else "3,9")
        else:
            base = 2
            sign0 = 1 if k % 16 in (5, 15) else -1
            branch = "k = %s mod 16" % ("5,15" if k % 16 in (5, 15) else "7,13")
        bn = pow(base, n, p)
        diags = []
        vals = []
        for x, y in cands:
            if y % 2 == 0:
                raise Anomaly("y is even")
            vals.append((f"(x,y)=({x},{y})",
                         sign0 * _sgn_pow(_lehmer_exp(p, y)) * bn % p))
        link = _candidate_link("V_((p+1)/4)(k,-1)", pair.v, vals, 1, p, diags)
        return branch, [link], diags

    return checker


def _central2_lucas_sums(b: int, pp: PrimePower) -> tuple:
    """(sum C(2k,k)^2 U_k(b,1), sum C(2k,k)^2 V_k(b,1)) for k <= (p-1)/2.

    C(2k,k) carries no p-valuation on that range, so this is pure unit
    arithmetic mod p^e.
    """
    pe = pp.m
    inv = context(pp.p, pp.e).inv
    su = sv = 0
    bk = 1
    for pair in lucas_stream(b, 1, (pp.p - 1) // 2, pp):
        k = pair.n
        if k:
            bk = bk * 4 % pe * ((2 * k - 1) * (2 * k - 1) % pe) % pe \
                * (inv[k] * inv[k] % pe) % pe
        su = (su + bk * pair.u) % pe
        sv = (sv + bk * pair.v) % pe
    return su, sv


def _check_37(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p <= 7 or p % 7 not in (1, 2, 4):
            raise NotApplicable("p is not 1, 2, 4 mod 7 (or p <= 7)")
        C, D = _rep_unique(p, 1, 7, True, "p = C^2 + 7D^2")
        pe = pp.m
        su, sv = _central2_lucas_sums(16, pp)
        if p % 4 == 1:
            Cn = _pin_sign(C, 4, 1, "C = 1 mod 4")
            if part == "i":
                return "p = 1 mod 4", [("sum C(2k,k)^2 U_k(16,1)", su, 0, pp.e)]
            rhs = _sgn_pow((p - 1) // 4) * (4 * Cn - p * _inv(Cn, pp)) % pe
            return "p = 1 mod 4", [("sum C(2k,k)^2 V_k(16,1)", sv, rhs, pp.e)]
        Dn = _pin_sign(D, 4, 1, "D = 1 mod 4")
        if part == "i":
            rhs = _sgn_pow((p - 3) // 4) \
                * (16 * Dn * _inv(3, pp) - 4 * p * _inv(21 * Dn, pp)) % pe
            return "p = 3 mod 4", [("sum C(2k,k)^2 U_k(16,1)", su, rhs, pp.e)]
        rhs = _sgn_pow((p + 1) // 4) * (84 * Dn - 3 * p * _inv(Dn, pp)) % pe
        return "p = 3 mod 4", [("sum C(2k,k)^2 V_k(16,1)", sv, rhs, pp.e)]

    return checker


def _check_38(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 3 or p % 13 not in (1, 3, 4, 9, 10, 12):
        raise NotApplicable("p is not a nonzero square mod 13 (or p <= 3)")
    su, _ = _central2_lucas_sums(11, pp)
    return "single case", [("sum C(2k,k)^2 U_k(11,1)", su, 0, 1)]


# ---------------------------------------------------------------------------
# truncated factorial-quotient sums


def _sum_value(family: str, m: int, pp: PrimePower, upper: str = "p-1",
               weight=None) -> int:
    return factorial_sum(SumSpec(family, m, weight=weight, upper=upper), pp)


def _v_4x2(p, x, y):
    return 4 * x * x - 2 * p


def _v_2x2(p, x, y):
    return 2 * x * x - 2 * p


def _v_8x2(p, x, y):
    return 8 * x * x - 2 * p


def _v_m12x2(p, x, y):
    return 2 * p - 12 * x * x


def _v_m6x2(p, x, y):
    return 2 * p - 6 * x * x


def _v_m24x2(p, x, y):
    return 2 * p - 24 * x * x


def _pattern_checker(label: str, family: str, m: int, pmin: int, cases: list,
                     upper: str = "p-1"):
    """Branch table driver for the factorial-family sums.

    cases entries:
      ("rep", (mod, classes, mult, a, b, value_fn, required))
      ("zero", (mod, classes))
    evaluated in order; value_fn(p, x, y).  The p = x^2 + y^2 form is
    served by the normalized two-squares split (odd x) instead of raw
    enumeration.
    """

    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p <= pmin:
            raise NotApplicable(f"requires p > {pmin}")
        lhs = _sum_value(family, m, pp, upper=upper)
        pe = pp.m
        for kind, data in cases:
            if kind == "zero":
                mod, classes = data
                if p % mod in classes:
                    return f"zero class mod {mod}", [(label, lhs, 0, pp.e)]
                continue
            mod, classes, mult, a, b, val, required = data
            if p % mod not in classes:
                continue
            what = _form_label(mult, a, b)
            if mult == 1 and a == 1 and b == 1:
                c, d = _two_squares(p)
                cands = [(abs(c), abs(d))]
            else:
                cands = _rep_candidates(mult * p, a, b, required, what)
            diags = []
            vals = [(f"(x,y)=({x},{y})", val(p, x, y) % pe) for x, y in cands]
            link = _candidate_link(label, lhs, vals, pp.e, p, diags)
            return what, [link], diags
        raise NotApplicable("no stated case covers p")

    return checker


def _check_412(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 3:
        raise NotApplicable("requires p > 3")
    lhs = _sum_value("CUBE2K3K", -8640, pp)
    pe = pp.m
    if p % 3 == 2:
        return "p = 2 mod 3", [("sum", lhs, 0, pp.e)]
    x, y = _rep_unique(p, 1, 3, True, "p = x^2 + 3y^2")
    w = pow(10, (p - 1) // 3, p)
    r1 = (-1 - x * pow(y, -1, p)) * pow(2, -1, p) % p
    r2 = (-1 + x * pow(y, -1, p)) * pow(2, -1, p) % p
    idx = _exactly_one([w == 1, w == r1, w == r2],
                       "10^((p-1)/3) vs the cube roots of unity")
    crit = (x * y) % 5 == 0
    if (idx == 0) != crit:
        raise Anomaly("cube-root criterion mismatch: 10^((p-1)/3) = 1 "
                      f"is {idx == 0} but 5 | xy is {crit}")
    if idx == 0:
        branch = "10^((p-1)/3) = 1 mod p (5 | xy)"
        rhs = (4 * x * x - 2 * p) % pe
    elif idx == 1:
        branch = "10^((p-1)/3) = (-1 - x/y)/2 mod p"
        rhs = (p - 2 * x * x + 6 * x * y) % pe
    else:
        branch = "10^((p-1)/3) = (-1 + x/y)/2 mod p"
        rhs = (p - 2 * x * x - 6 * x * y) % pe
    return branch, [("sum", lhs, rhs, pp.e)]


def _check_413(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 12 != 1:
        raise NotApplicable("p is not 1 mod 12")
    a, _ = _two_squares(p)  # p = a^2 + 4b^2 with a = 1 mod 4
    A = _pin_sign(_rep_unique(p, 1, 3, True, "p = A^2 + 3B^2")[0], 4, 1,
                  "A = 1 mod 4")
    pe = pp.m
    lhs = _sum_value("BINOM63SQ", -4096, pp, upper="(p-1)/6")
    rhs = _sgn_pow((p - 1) // 4) * _inv(3, pp) \
        * (2 * a + 4 * A - p * _inv(2 * a, pp) - p * _inv(A, pp)) % pe
    return "p = a^2 + 4b^2 = A^2 + 3B^2", \
        [("sum_(k<=(p-1)/6) C(6k,3k)^2/(-16)^(3k)", lhs, rhs, pp.e)]


def _check_414(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    pe = pp.m
    lhs = _sum_value("ZP", -16, pp)
    if p % 4 == 3:
        return "p = 3 mod 4", [("Z_p(-16)", lhs, 0, pp.e)]
    c, d = _two_squares(p)
    if p % 12 == 1:
        if d % 3 == 0:
            branch, rhs = "p = 1 mod 12, 6 | y", (4 * c * c - 2 * p) % pe
        elif c % 3 == 0:
            branch, rhs = "p = 1 mod 12, 6 | x - 3", (2 * p - 4 * c * c) % pe
        else:
            raise Anomaly("p = 1 mod 12 yet 3 divides neither coordinate")
        return branch, [("Z_p(-16)", lhs, rhs, pp.e)]
    xy = abs(c) * abs(d)
    rhs = 4 * jacobi(xy, 3) * xy % pe
    return "p = 5 mod 12", [("Z_p(-16)", lhs, rhs, pp.e)]


def _zp_checker(m: int, pmin: int, cases: list):
    return _pattern_checker(f"Z_p({m})", "ZP", m, pmin, cases)


def _check_419(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 7:
        raise NotApplicable("requires p > 7")
    pe = pp.m
    l5 = _sum_value("ZP", 5, pp)
    l49 = _sum_value("ZP", -49, pp)
    r = p % 30
    if r in (1, 19):
        what = "p = x^2 + 15y^2"
        cands = _rep_candidates(p, 1, 15, True, what)
        vals = [(f"(x,y)=({x},{y})", (4 * x * x - 2 * p) % pe) for x, y in cands]
    elif r in (17, 23):
        what = "p = 3x^2 + 5y^2"
        cands = _rep_candidates(p, 3, 5, True, what)
        vals = [(f"(x,y)=({x},{y})", (2 * p - 12 * x * x) % pe) for x, y in cands]
    elif r in (7, 11, 13, 29):
        return "zero class mod 30", [("Z_p(5)", l5, 0, pp.e),
                                     ("Z_p(-49)", l49, 0, pp.e)]
    else:
        raise NotApplicable("no stated case covers p")
    diags = []
    return what, [_candidate_link("Z_p(5)", l5, vals, pp.e, p, diags),
                  _candidate_link("Z_p(-49)", l49, vals, pp.e, p, diags)], diags


_F420 = {7: -112, 11: -400, 19: -2704, 31: -24304, 59: -1123600}
_F421 = {5: 320, 7: 896, 13: 10400, 17: 39200}


def _genus_zp_checker(sid: str):
    table = _F420 if sid == "4.20" else _F421

    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        b = inst.params_dict()["b"]
        if b not in table:
            raise ValueError(f"b must be one of {sorted(table)}")
        m = table[b]
        if p in (2, 3, b) or m % p == 0:
            raise NotApplicable("p | f(b) or p in {2, 3, b}")
        pe = pp.m
        lhs = _sum_value("ZP", m, pp)
        disc = 3 * b if sid == "4.20" else 6 * b
        if jacobi(-disc, p) == -1:
            return f"(-{disc}/p) = -1", [(f"Z_p({m})", lhs, 0, pp.e)]
        if sid == "4.20":
            forms = [(1, 1, 3 * b, _v_4x2), (1, 3, b, _v_m12x2),
                     (2, 1, 3 * b, _v_2x2), (2, 3, b, _v_m6x2)]
        else:
            forms = [(1, 1, 6 * b, _v_4x2), (1, 2, 3 * b, _v_8x2),
                     (1, 3, 2 * b, _v_m12x2), (1, 6, b, _v_m24x2)]
        diags = []
        for mult, fa, fb, val in forms:
            cands = _reps(mult * p, fa, fb)
            if not cands:
                continue
            what = _form_label(mult, fa, fb)
            vals = [(f"(x,y)=({x},{y})", val(p, x, y) % pe) for x, y in cands]
            link = _candidate_link(f"Z_p({m})", lhs, vals, pp.e, p, diags)
            return what, [link], diags
        raise NotApplicable(f"(-{disc}/p) = 1 but no listed form applies")

    return checker


def _weighted_checker(family: str, m: int, weight: tuple, coef: int, sym,
                      pmin: int, excludes: tuple = ()):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p <= pmin:
            raise NotApplicable(f"requires p > {pmin}")
        if p in excludes:
            raise NotApplicable(f"p = {p} is excluded")
        lhs = _sum_value(family, m, pp, weight=weight)
        rhs = coef * sym(p) * p % pp.m
        label = f"sum ({weight[0]}k+{weight[1]}) term_k({m})"
        return "single case", [(label, lhs, rhs, pp.e)]

    return checker


# ---------------------------------------------------------------------------
# generalized binomial statements


def _gb(r1, r2, x, pp: PrimePower, upper: Optional[int] = None) -> int:
    return genbinom_sum(r1, r2, x, pp, pp.p - 1 if upper is None else upper)


def _pair_sums(x, pp: PrimePower) -> tuple:
    """The C(-1/3,.)C(-1/6,.) and C(-2/3,.)C(-5/6,.) companion sums at x."""
    return (_gb(F(-1, 3), F(-1, 6), x, pp), _gb(F(-2, 3), F(-5, 6), x, pp))


def _lam_twist(p: int, pe: int, base: Fraction, sym_a: Optional[int]) -> int:
    """(sym_a/p) * base^((1-(p/3))/2) mod pe; base hits only when (p/3) = -1."""
    lam = jacobi(sym_a, p) if sym_a is not None else 1
    if jacobi(p, 3) == -1:
        lam = lam * base.numerator % pe * pow(base.denominator, -1, pe) % pe
    return lam % pe


def _check_425(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 5:
        raise NotApplicable("requires p > 5")
    pe = pp.m
    s1, s2 = _pair_sums(-4, pp)
    lam = _lam_twist(p, pe, F(5), 5)
    r = p % 30
    diags = []
    if r in (1, 19):
        what = "p = x^2 + 15y^2"
        cands = _rep_candidates(p, 1, 15, True, what)
        vals = [(f"(x,y)=({x},{y})",
                 jacobi(x, 3) * (2 * x - p * _inv(2 * x, pp)) % pe)
                for x, y in cands]
    elif r in (17, 23):
        what = "p = 5x^2 + 3y^2"
        cands = _rep_candidates(p, 5, 3, True, what)
        vals = [(f"(x,y)=({x},{y})",
                 -jacobi(x, 3) * (10 * x - p * _inv(2 * x, pp)) % pe)
                for x, y in cands]
    elif r in (7, 11, 13, 29):
        return "zero class mod 30", [("pair sums mod p", s1 % p, lam * s2 % p, 1),
                                     ("sum mod p", s1 % p, 0, 1)], diags
    else:
        raise NotApplicable("no stated case covers p")
    links = [("pair sums", s1, lam * s2 % pe, pp.e),
             _candidate_link("sum", s1, vals, pp.e, p, diags)]
    return what, links, diags


def _check_426(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 3:
        raise NotApplicable("requires p > 3")
    pe = pp.m
    s1, s2 = _pair_sums(F(1, 2), pp)
    lam = _lam_twist(p, pe, F(1, 2), 2)
    r = p % 24
    diags = []
    if r in (1, 7):
        what = "p = x^2 + 6y^2"
        cands = _rep_candidates(p, 1, 6, True, what)
        vals = [(f"(x,y)=({x},{y})",
                 jacobi(x, 3) * (2 * x - p * _inv(2 * x, pp)) % pe)
                for x, y in cands]
    elif r in (5, 11):
        what = "p = 2x^2 + 3y^2"
        cands = _rep_candidates(p, 2, 3, True, what)
        vals = [(f"(x,y)=({x},{y})",
                 jacobi(x, 3) * (2 * x - p * _inv(4 * x, pp)) % pe)
                for x, y in cands]
    elif r in (13, 19):
        return "zero class mod 24", [("pair sums mod p", s1 % p, lam * s2 % p, 1),
                                     ("sum mod p", s1 % p, 0, 1)], diags
    else:
        raise NotApplicable("no stated case covers p")
    links = [("pair sums", s1, lam * s2 % pe, pp.e),
             _candidate_link("sum", s1, vals, pp.e, p, diags)]
    return what, links, diags


def _twist_pair_sym(x_arg, sym_a: int, base: Fraction, disc_b: int,
                    coef2: Fraction):
    """The 4p = x^2 + 3*disc_b*y^2 / disc_b*x^2 + 3y^2 shape shared by the
    -1/16, -1/1024, -1/250000 statements; zero branch on (p/3) = -(p/disc_b)
    = 1, all congruences for the value branches mod p^2."""

    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p <= 3:
            raise NotApplicable("requires p > 3")
        if disc_b % p == 0:
            raise NotApplicable(f"p divides {disc_b}")
        pe = pp.m
        s1, s2 = _pair_sums(x_arg, pp)
        lam = _lam_twist(p, pe, base, sym_a)
        diags = []
        cands = _reps(4 * p, 1, 3 * disc_b)
        if cands:
            what = _form_label(4, 1, 3 * disc_b)
            vals = [(f"(x,y)=({x},{y})",
                     -jacobi(x, 3) * (x - p * _inv(x, pp)) % pe)
                    for x, y in cands]
            return what, [("pair sums", s1, lam * s2 % pe, pp.e),
                          _candidate_link("sum", s1, vals, pp.e, p, diags)], diags
        cands = _reps(4 * p, disc_b, 3)
        if cands:
            what = _form_label(4, disc_b, 3)
            cn = coef2.numerator * pow(coef2.denominator, -1, pe)
            vals = [(f"(x,y)=({x},{y})",
                     jacobi(x, 3) * cn * (disc_b * x - p * _inv(x, pp)) % pe)
                    for x, y in cands]
            return what, [("pair sums", s1, lam * s2 % pe, pp.e),
                          _candidate_link("sum", s1, vals, pp.e, p, diags)], diags
        if jacobi(p, 3) == 1 and jacobi(p, disc_b) == -1:
            return f"(p/3) = 1, (p/{disc_b}) = -1", \
                [("pair sums mod p", s1 % p, lam * s2 % p, 1),
                 ("sum mod p", s1 % p, 0, 1)], diags
        raise NotApplicable("no stated case covers p")

    return checker


def _check_430(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 5:
        raise NotApplicable("requires p > 5")
    pe = pp.m
    s1, s2 = _pair_sums(F(-1, 80), pp)
    lam = jacobi(5, p)
    r = p % 30
    diags = []
    if r in (1, 19):
        what = "4p = x^2 + 75y^2, x = 2 mod 3"
        cands = _rep_candidates(4 * p, 1, 75, True, what)
        vals = []
        for x, y in cands:
            xn = _pin_sign(x, 3, 2, "x = 2 mod 3")
            vals.append((f"(x,y)=({xn},{y})", (xn - p * _inv(xn, pp)) % pe))
    elif r in (7, 13):
        what = "4p = 25x^2 + 3y^2, x = 1 mod 3"
        cands = _rep_candidates(4 * p, 25, 3, True, what)
        vals = []
        for x, y in cands:
            xn = _pin_sign(x, 3, 1, "x = 1 mod 3")
            vals.append((f"(x,y)=({xn},{y})",
                         (5 * xn - p * _inv(5 * xn, pp)) % pe))
    elif r in (17, 23):
        return "zero class mod 30", [("pair sums mod p", s1 % p, lam * s2 % p, 1),
                                     ("sum mod p", s1 % p, 0, 1)], diags
    else:
        raise NotApplicable("no stated case covers p")
    links = [("pair sums", s1, lam * s2 % pe, pp.e),
             _candidate_link("sum", s1, vals, pp.e, p, diags)]
    return what, links, diags


def _check_431(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 11:
        raise NotApplicable("requires p > 11")
    if jacobi(p, 11) != 1:
        raise NotApplicable("(p/11) is not 1")
    pe = pp.m
    s1, s2 = _pair_sums(F(27, 16), pp)
    lam = _lam_twist(p, pe, F(-11, 16), None)
    x, y0 = _rep_unique(4 * p, 1, 11, True, "4p = x^2 + 11y^2")
    ex = jacobi(p, 3) * jacobi(-2, p)
    diags = []
    vals = []
    for y in (y0, -y0):
        if x % p == 0 or y % p == 0:
            raise Anomaly("coordinate divisible by p")
        if p % 3 == 1:
            arg = (-11 + x * pow(y, -1, p)) % p
            rhs = -ex * jacobi(arg, p) * jacobi(x, 11) \
                * (x - p * _inv(x, pp)) % pe
        else:
            arg = (-11 + jacobi(x, 11) * x * pow(y, -1, p)) % p
            rhs = -ex * jacobi(arg, p) * _inv(4, pp) \
                * (11 * y - p * _inv(y, pp)) % pe
        vals.append((f"(x,y)=({x},{y})", rhs))
    branch = "3 | p - 1" if p % 3 == 1 else "3 | p - 2"
    links = [("pair sums", s1, lam * s2 % pe, pp.e),
             _candidate_link("sum", s1, vals, pp.e, p, diags)]
    return branch, links, diags


def _l27m_rep(p: int, pp: PrimePower) -> int:
    L, _ = _rep_unique(4 * p, 1, 27, True, "4p = L^2 + 27M^2")
    return _pin_sign(L, 3, 2, "L = 2 mod 3")


def _check_432(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 3 != 1:
        raise NotApplicable("p is not 1 mod 3")
    pe = pp.m
    s1, s2 = _pair_sums(F(-9, 16), pp)
    L = _l27m_rep(p, pp)
    rhs = (L - p * _inv(L, pp)) % pe
    return "4p = L^2 + 27M^2, L = 2 mod 3", \
        [("pair sums", s1, s2, pp.e), ("sum", s1, rhs, pp.e)]


def _check_433(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 8 not in (1, 3) or p == 3:
        raise NotApplicable("p is not 1, 3 mod 8 (or p = 3)")
    pe = pp.m
    s1, s2 = _pair_sums(F(27, 2), pp)
    lam = _lam_twist(p, pe, F(-25, 2), None)
    c0, d0 = _rep_unique(p, 1, 2, True, "p = c^2 + 2d^2")
    c = _pin_sign(c0, 4, 1, "c = 1 mod 4")
    sgn = _sgn_pow(p // 8)
    diags = []
    vals = []
    for d in (d0, -d0):
        if p % 24 in (1, 19):
            arg = (-2 - c * pow(d, -1, p)) % p
            rhs = sgn * jacobi(arg, p) * (2 * c - p * _inv(2 * c, pp)) % pe
        else:
            arg = (2 + c * pow(d, -1, p)) % p
            rhs = sgn * jacobi(2, p) * jacobi(arg, p) \
                * (10 * d - 5 * p * _inv(4 * d, pp)) % pe
        vals.append((f"(c,d)=({c},{d})", rhs))
    branch = "p = 1,19 mod 24" if p % 24 in (1, 19) else "p = 11,17 mod 24"
    links = [("pair sums", s1, lam * s2 % pe, pp.e),
             _candidate_link("sum", s1, vals, pp.e, p, diags)]
    return branch, links, diags


def _check_434(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p % 3 != 1:
        raise NotApplicable("p is not 1 mod 3")
    s = _gb(F(-1, 3), F(-1, 3), 9, pp)
    L = _l27m_rep(p, pp)
    rhs = (L - p * _inv(L, pp)) % pp.m
    return "4p = L^2 + 27M^2, L = 2 mod 3", \
        [("sum C(-1/3,k)^2 9^k", s, rhs, pp.e)]


def _check_435(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 4 != 1:
            raise NotApplicable("p is not 1 mod 4")
        pe = pp.m
        c, d = _two_squares(p)
        x = _pin_sign(c, 4, 1, "x = 1 mod 4")
        y = abs(d)
        if part == "a":
            s = _gb(F(-1, 4), F(-1, 4), -8, pp)
            rhs = _sgn_pow((p - 1) // 4) * (2 * x - p * _inv(2 * x, pp)) % pe
            return "p = x^2 + y^2, x = 1 mod 4", \
                [("sum C(-1/4,k)^2 (-8)^k", s, rhs, pp.e)]
        s = _gb(F(-1, 4), F(-1, 4), F(-1, 8), pp)
        if p % 8 == 1:
            rhs = _sgn_pow(_guard_div(y, 4, "y/4")) \
                * (2 * x - p * _inv(2 * x, pp)) % pe
            branch = "p = 1 mod 8"
        else:
            rhs = _sgn_pow(_guard_div(y - 2, 4, "(y-2)/4")) \
                * (2 * y - p * _inv(2 * y, pp)) % pe
            branch = "p = 5 mod 8"
        return branch, [("sum C(-1/4,k)^2 (-1/8)^k", s, rhs, pp.e)]

    return checker


def _check_436(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 3 != 1:
            raise NotApplicable("p is not 1 mod 3")
        pe = pp.m
        A0, B0 = _rep_unique(p, 1, 3, True, "p = A^2 + 3B^2")
        if p % 12 == 1:
            A = abs(A0)
            if A % 2 == 0:
                raise Anomaly("A is even although p = 1 mod 12")
            if part == "a":
                rhs = _sgn_pow((p - 1) // 4 + (A - 1) // 2) \
                    * (2 * A - p * _inv(2 * A, pp)) % pe
            else:
                rhs = _sgn_pow((A - 1) // 2) * (2 * A - p * _inv(2 * A, pp)) % pe
            branch = "p = 1 mod 12"
        else:
            B = abs(B0)
            if B % 2 == 0:
                raise Anomaly("B is even although p = 7 mod 12")
            if part == "a":
                rhs = _sgn_pow((p + 1) // 4 + (B - 1) // 2) \
                    * (6 * B - p * _inv(2 * B, pp)) % pe
            else:
                rhs = _sgn_pow((B - 1) // 2) * (3 * B - p * _inv(4 * B, pp)) % pe
            branch = "p = 7 mod 12"
        if part == "a":
            sa = _gb(F(-1, 4), F(-1, 4), 4, pp)
            sb = _gb(F(-1, 4), F(-1, 2), -8, pp)
            return branch, [("companion sums", sa, sb, pp.e),
                            ("sum C(-1/4,k)^2 4^k", sa, rhs, pp.e)]
        s = _gb(F(-1, 4), F(-1, 4), F(1, 4), pp)
        return branch, [("sum C(-1/4,k)^2/4^k", s, rhs, pp.e)]

    return checker


def _check_437(part: str):
    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p % 7 not in (1, 2, 4):
            raise NotApplicable("p is not 1, 2, 4 mod 7")
        pe = pp.m
        x0, y0 = _rep_unique(p, 1, 7, True, "p = x^2 + 7y^2")
        if p % 4 == 1:
            x = abs(x0)
            if x % 2 == 0:
                raise Anomaly("x is even although p = 1 mod 4")
            core = _sgn_pow((x - 1) // 2) * (2 * x - p * _inv(2 * x, pp))
            rhs = (jacobi(2, p) * core if part == "a" else core) % pe
            branch = "p = 1 mod 4"
        else:
            y = abs(y0)
            if y % 2 == 0:
                raise Anomaly("y is even although p = 3 mod 4")
            if part == "a":
                rhs = jacobi(2, p) * _sgn_pow((y - 1) // 2) \
                    * (42 * y - 3 * p * _inv(2 * y, pp)) % pe
            else:
                rhs = 3 * _inv(4, pp) * _sgn_pow((y - 1) // 2) \
                    * (7 * y - p * _inv(4 * y, pp)) % pe
            branch = "p = 3 mod 4"
        x_arg = 64 if part == "a" else F(1, 64)
        s = _gb(F(-1, 4), F(-1, 4), x_arg, pp)
        label = "sum C(-1/4,k)^2 64^k" if part == "a" else "sum C(-1/4,k)^2/64^k"
        return branch, [(label, s, rhs, pp.e)]

    return checker


def _check_438(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    pe = pp.m
    s = _gb(F(-1, 4), F(-1, 4), -1, pp)
    if p % 8 in (5, 7):
        return "p = 5,7 mod 8", [("sum (-1)^k C(-1/4,k)^2 mod p", s % p, 0, 1)]
    x0, y0 = _rep_unique(p, 1, 2, True, "p = x^2 + 2y^2")
    x, y = abs(x0), abs(y0)
    if p % 8 == 1:
        rhs = _sgn_pow((x + 1) // 2 + y // 2 + 1) \
            * (2 * x - p * _inv(2 * x, pp)) % pe
        branch = "p = x^2 + 2y^2 = 1 mod 8"
    else:
        if y % 2 == 0:
            raise Anomaly("y is even although p = 3 mod 8")
        rhs = _sgn_pow((y - 1) // 2) * (4 * y - p * _inv(2 * y, pp)) % pe
        branch = "p = x^2 + 2y^2 = 3 mod 8"
    return branch, [("sum (-1)^k C(-1/4,k)^2", s, rhs, pp.e)]


def _check_439(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    pe = pp.m
    s1 = _gb(F(-1, 4), F(-1, 2), F(1, 4), pp)
    s2 = _gb(F(-1, 2), F(-1, 6), 2, pp)
    if p % 4 == 3:
        return "p = 3 mod 4", [("sum C(-1/4,k)C(-1/2,k)/4^k", s1, 0, pp.e),
                               ("sum C(-1/2,k)C(-1/6,k)2^k mod p", s2 % p, 0, 1)]
    c, d = _two_squares(p)
    x, y = abs(c), abs(d)
    links = [("companion sums", s1, jacobi(p, 3) * s2 % pe, pp.e)]
    diags = []
    if p % 12 == 1:
        sgn = _sgn_pow((p - 1) // 4 + (x + 1) // 2) * (1 if x % 3 == 0 else -1)
        rhs = sgn * (2 * x - p * _inv(2 * x, pp)) % pe
        links.append(("sum", s1, rhs, pp.e))
        branch = "12 | p - 1"
    else:
        vals = [(f"y={yy}", (2 * yy - p * _inv(2 * yy, pp)) % pe)
                for yy in (y, -y)]
        links.append(_candidate_link("sum", s1, vals, pp.e, p, diags))
        branch = "12 | p - 5"
    return branch, links, diags


def _check_440(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p == 5:
        raise NotApplicable("p = 5 is excluded")
    pe = pp.m
    s1 = _gb(F(-1, 4), F(-1, 2), F(-1, 3), pp)
    s2 = _gb(F(-1, 4), F(-1, 2), F(1, 81), pp)
    if p % 4 == 3:
        return "p = 3 mod 4", [("sum at -1/3 mod p", s1 % p, 0, 1),
                               ("sum at 1/81 mod p", s2 % p, 0, 1)]
    x = abs(_two_squares(p)[0])
    tw = _sgn_pow((p - 1) // 4) * jacobi(2, p) * jacobi(p, 3)
    links = [("twisted companion sums", s1, tw * s2 % pe, pp.e)]
    diags = []
    vals = [(f"x={xx}", (2 * xx - p * _inv(2 * xx, pp)) % pe) for xx in (x, -x)]
    links.append(_candidate_link("sum", s1, vals, pp.e, p, diags))
    return "p = x^2 + y^2, 2 does not divide x", links, diags


def _check_441(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    pe = pp.m
    s = _gb(F(-1, 4), F(-1, 2), F(-1, 80), pp)
    if p % 4 == 3:
        return "p = 3 mod 4", [("sum mod p", s % p, 0, 1)]
    c, d = _two_squares(p)
    diags = []
    if p % 5 in (1, 4):
        x = abs(c)
        vals = [(f"x={xx}", (2 * xx - p * _inv(2 * xx, pp)) % pe)
                for xx in (x, -x)]
        branch = "p = +-1 mod 5"
    elif p % 5 in (2, 3):
        y = abs(d)
        vals = [(f"y={yy}", (2 * yy - p * _inv(2 * yy, pp)) % pe)
                for yy in (y, -y)]
        branch = "p = +-2 mod 5"
    else:
        raise NotApplicable("p = 5 is not covered")
    return branch, [_candidate_link("sum", s, vals, pp.e, p, diags)], diags


def _check_442(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 5:
        raise NotApplicable("requires p > 5")
    pe = pp.m
    s = _gb(F(-1, 4), F(-1, 2), 2, pp)
    if p % 8 in (5, 7):
        return "p = 5,7 mod 8", [("sum mod p", s % p, 0, 1)]
    x = _pin_sign(_rep_unique(p, 1, 2, True, "p = x^2 + 2y^2")[0], 4, 1,
                  "x = 1 mod 4")
    rhs = (2 * x - p * _inv(2 * x, pp)) % pe
    return "p = x^2 + 2y^2, x = 1 mod 4", [("sum", s, rhs, pp.e)]


def _a3b_pinned(p: int) -> tuple:
    A0, B0 = _rep_unique(p, 1, 3, True, "p = A^2 + 3B^2")
    return _pin_sign(A0, 3, 1, "A = 1 mod 3"), B0


def _check_443(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 5:
        raise NotApplicable("requires p > 5")
    pe = pp.m
    s1 = _gb(F(-1, 2), F(-1, 3), -3, pp)
    s2 = _gb(F(-1, 2), F(-1, 3), F(-1, 27), pp)
    s3 = _gb(F(-1, 2), F(-2, 3), F(-1, 4), pp)
    s4 = _gb(F(-1, 2), F(-1, 3), F(1, 5), pp)
    s5 = _gb(F(-1, 2), F(-1, 3), 2, pp)
    if p % 3 == 2:
        return "p = 2 mod 3", [
            ("sum at -3 mod p", s1 % p, 0, 1),
            ("sum at -1/27 mod p", s2 % p, 0, 1),
            ("sum at -1/4 mod p", s3 % p, 0, 1),
            ("sum at 1/5 mod p", s4 % p, 0, 1),
            ("sum at 2 mod p", s5 % p, 0, 1),
        ]
    A, _ = _a3b_pinned(p)
    rhs = (2 * A - p * _inv(2 * A, pp)) % pe
    links = [("sum at -3", s1, rhs, pp.e)]
    if p != 7:
        links.append(("sum at -1/27", s2, rhs, pp.e))
    links += [
        ("sum at -1/4", s3, rhs, pp.e),
        ("(p/5) sum at 1/5", jacobi(p, 5) * s4 % pe, rhs, pp.e),
        ("(-1/p) sum at 2", jacobi(-1, p) * s5 % pe, rhs, pp.e),
    ]
    return "p = A^2 + 3B^2, A = 1 mod 3", links


def _check_444(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 5:
        raise NotApplicable("requires p > 5")
    pe = pp.m
    s = _gb(F(-1, 2), F(-1, 3), F(-1, 4), pp)
    if p % 3 == 2:
        return "p = 2 mod 3", [("sum mod p", s % p, 0, 1)]
    A, B0 = _a3b_pinned(p)
    if (A * B0) % 5 == 0:
        rhs = jacobi(p, 5) * (2 * A - p * _inv(2 * A, pp)) % pe
        return "5 | AB", [("sum", s, rhs, pp.e)]
    B = None
    for bb in (B0, -B0):
        if A * pow(bb % 5, -1, 5) % 5 in (3, 4):  # A/B = -2, -1 mod 5
            B = bb
            break
    if B is None:
        raise Anomaly("no sign of B gives A/B = -1, -2 mod 5")
    t = A + 3 * B
    rhs = -jacobi(p, 5) * (t - p * _inv(t, pp)) % pe
    return "A/B = -1,-2 mod 5", [("sum", s, rhs, pp.e)]


def _check_445(inst: ConjectureInstance, pp: PrimePower):
    p = pp.p
    if p <= 5:
        raise NotApplicable("requires p > 5")
    pe = pp.m
    s = _gb(F(-1, 2), F(-1, 6), F(-3, 125), pp)
    if p % 3 == 2:
        return "p = 2 mod 3", [("sum mod p", s % p, 0, 1)]
    A0, _ = _rep_unique(p, 1, 3, True, "p = A^2 + 3B^2")
    diags = []
    vals = [(f"A={aa}", (2 * aa - p * _inv(2 * aa, pp)) % pe)
            for aa in (abs(A0), -abs(A0))]
    return "p = A^2 + 3B^2", \
        [_candidate_link("sum", s, vals, pp.e, p, diags)], diags


_C446 = {
    "i": (4, (1,), 64, [(3, 1728), (33, 287496)]),
    "ii": (7, (1, 2, 4), 1, [(-15, -3375), (-255, 16581375)]),
    "iii": (8, (1, 3), -64, [(5, 8000)]),
    "iv": (3, (1,), 256, [(-5, 54000)]),
}


def _check_446(part: str):
    mod, classes, m_central, rights = _C446[part]

    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p <= 3:
            raise NotApplicable("requires p > 3")
        if p % mod not in classes:
            raise NotApplicable(f"p is not in {classes} mod {mod}")
        pe = pp.m
        lhs = _sum_value("CENTRAL3", m_central, pp, upper="(p-1)/2")
        links = []
        for sa, mm in rights:
            rv = jacobi(sa, p) * _sum_value("SIX3K", mm, pp) % pe
            links.append((f"central cubes vs ({sa}/p) triple sum({mm})",
                          lhs, rv, pp.e))
        return "single case", links

    return checker


def _check_ded(inst: ConjectureInstance, pp: PrimePower):
    m = inst.params_dict()["m"]
    ok = central3_identity_check(m, pp.p)
    return f"m = {m}", [("four-way identity", 1 if ok else 0, 1, 1)]


def _corollary_checker(sid: str, x_arg, coef: Fraction, rep: tuple):
    """Companion statements mod p: coef * sum_(k<=(p-5)/6)
    C((p-2)/3,k) C((p-5)/6,k) x^k against x(x/3) (or the y-symbol shape of
    the 27/16 statement) for p = 2 mod 3 represented by the given form."""
    mult, fa, fb = rep

    def checker(inst: ConjectureInstance, pp: PrimePower):
        p = pp.p
        if p <= max(5, fb, fa):
            raise NotApplicable("p is too small")
        if p % 3 != 2:
            raise NotApplicable("p is not 2 mod 3")
        if sid == "4.31c" and jacobi(p, 11) != 1:
            raise NotApplicable("(p/11) is not 1")
        what = _form_label(mult, fa, fb)
        cands = _rep_candidates(mult * p, fa, fb, False, what)
        p1 = PrimePower(p, 1)
        s = genbinom_sum(F(p - 2, 3), F(p - 5, 6), x_arg, p1, (p - 5) // 6)
        lhs = coef.numerator * pow(coef.denominator, -1, p) * s % p
        if sid == "4.31c":
            lhs = lhs * jacobi(p, 3) * jacobi(-2, p) % p
        diags = []
        vals = []
        for x, y in cands:
            if sid == "4.31c":
                for yy in (y, -y):
                    arg = (-11 + jacobi(x, 11) * x * pow(yy, -1, p)) % p
                    vals.append((f"(x,y)=({x},{yy})", yy * jacobi(arg, p) % p))
            else:
                vals.append((f"(x,y)=({x},{y})", x * jacobi(x, 3) % p))
        lab = "y(symbol)" if sid == "4.31c" else "x(x/3)"
        link = _candidate_link(lab, lhs, vals, 1, p, diags)
        return what, [link], diags

    return checker


# ---------------------------------------------------------------------------
# catalog assembly

_CATALOG: dict = {}
_ORDER: list = []


def _add(sid: str, group: str, modexp: int, applies: str, formula: str,
         checker, params: tuple = (), proven: bool = False) -> None:
    if sid in _CATALOG:
        raise ValueError(f"duplicate id {sid}")
    _CATALOG[sid] = Statement(sid, group, modexp, applies, formula, params,
                              proven, checker)
    _ORDER.append(sid)


def _build_catalog() -> None:
    J = jacobi

    _add("T2.1", "power", 1, "p = 1 mod 24, p = c^2+d^2 = x^2+3y^2",
         "3^((p-1)/8) = +-1 or +-d/c mod p by c, d vs (-1)^(y/4) mod 3",
         _check_t21, proven=True)
    _add("2.1", "power", 1, "p = 13 mod 24, p = c^2+d^2 = x^2+3y^2",
         "3^((p-5)/8) = +-y/x or -+dy/(cx) mod p by x vs +-c, +-d mod 3",
         _check_21)
    for part in ("i", "ii"):
        sh = "1" if part == "i" else "5"
        _add(f"2.2{part}", "power", 1,
             f"p = 1,9,25 mod 28, p = {sh} mod 8, p = c^2+d^2 = x^2+7y^2",
             f"7^((p-{sh})/8) branch table on 7|c, 7|d, c = +-d mod 7",
             _check_22(part))
        _add(f"2.3{part}", "power", 1,
             f"p = 1,9 mod 20, p = {sh} mod 8, p = c^2+d^2 = x^2+5y^2",
             f"5^((p-{sh})/8) branch table on x vs +-c, +-d mod 5",
             _check_23(part))
    _add("2.4", "power", 1, "p = 1,9 mod 40, p = c^2+d^2 = x^2+10y^2",
         "5^((p-1)/8) = +-(-1)^(d/4+(x-1)/4) (d/c or 1) mod p", _check_24)
    for part in ("i", "ii"):
        sh = "1" if part == "i" else "5"
        _add(f"2.5{part}", "power", 1,
             f"p = 1,9,17,25,29,49 mod 52, p = {sh} mod 8, p = c^2+d^2 = x^2+13y^2",
             f"13^((p-{sh})/8) branch table on (2c+3d)/x mod 13", _check_25(part))
        _add(f"2.6{part}", "power", 1,
             f"p = {sh} mod 8 with p = c^2+d^2 = x^2+17y^2",
             f"17^((p-{sh})/8) branch table on 4c+d vs x mod 17", _check_26(part))
    for sid, cls in (("2.7", "q = 3 mod 8"), ("2.8", "q = 7 mod 16"),
                     ("2.9", "q = 15 mod 16")):
        for part in ("i", "ii"):
            sh = "1" if part == "i" else "5"
            _add(f"{sid}{part}", "power", 1,
                 f"p = {sh} mod 8, prime {cls}, p = c^2+d^2 = x^2+qy^2, q | cd",
                 f"q^((p-{sh})/8) branch table", _check_279(sid, part),
                 params=("q",))
    _add("2.10", "power", 1,
         "p = 1 mod 4, odd b, p = c^2+d^2 = x^2+(b^2+4)y^2 != b^2+4",
         "((b +- cx/(dy))/2)^((p-1)/4) branch table", _check_210, params=("b",))

    for part in ("i", "ii"):
        which = "4 does not divide xy (U)" if part == "i" else "4 | xy (V)"
        _add(f"3.1{part}", "lucas", 1,
             f"p = 1 mod 4, odd b, p = c^2+d^2 = x^2+(b^2+4)y^2, {which}",
             "U or V at index (p-1)/4 of (b,-1) mod p", _check_31(part),
             params=("b",))
    for sid, cls in (("3.2", "b = 4 mod 8"), ("3.3", "8 | b"),
                     ("3.4", "b = 2 mod 4")):
        _add(sid, "lucas", 1,
             f"p = 1 mod 4, {cls}, p = c^2+d^2 = x^2+(1+b^2/4)y^2",
             "U and V at index (p-1)/4 of (b,-1) mod p", _check_324(sid),
             params=("b",))
    _add("3.5", "lucas", 1, "p = 3 mod 4, odd k, p = x^2+(k^2+1)y^2",
         "V_((p+1)/4)(2k,-1) = +-(-1)^E (-2)^((p+1)/4) mod p", _check_35,
         params=("k",))
    for part in ("i", "ii"):
        kcls = "k = 1,3 mod 8" if part == "i" else "k = 5,7 mod 8"
        base = "-2" if part == "i" else "2"
        _add(f"3.6{part}", "lucas", 1,
             f"p = 3 mod 4, {kcls}, 2p = x^2+(k^2+4)y^2",
             f"V_((p+1)/4)(k,-1) = +-(-1)^E ({base})^((p+1)/4) mod p",
             _check_36(part), params=("k",))
    _add("3.7i", "lucas-sum", 2, "p > 7, p = 1,2,4 mod 7, p = C^2+7D^2",
         "sum C(2k,k)^2 U_k(16,1), k <= (p-1)/2, branch values mod p^2",
         _check_37("i"))
    _add("3.7ii", "lucas-sum", 2, "p > 7, p = 1,2,4 mod 7, p = C^2+7D^2",
         "sum C(2k,k)^2 V_k(16,1), k <= (p-1)/2, branch values mod p^2",
         _check_37("ii"))
    _add("3.8", "lucas-sum", 1, "p > 3, p a nonzero square mod 13",
         "sum C(2k,k)^2 U_k(11,1) = 0 mod p, k <= (p-1)/2", _check_38)

    _add("RV1", "sum", 2, "p > 3",
         "sum (6k)!/(1728^k (3k)! k!^3) = (p/3)(4x^2-2p) or 0 mod p^2",
         _pattern_checker("sum", "SEXTIC", 1728, 3, [
             ("rep", (4, (1,), 1, 1, 1,
                      lambda p, x, y: J(p, 3) * (4 * x * x - 2 * p), True)),
             ("zero", (4, (3,))),
         ]), proven=True)
    _add("RV2", "sum", 2, "p > 3",
         "sum (4k)!/(256^k k!^4) = 4x^2-2p or 0 mod p^2",
         _pattern_checker("sum", "QUARTIC", 256, 3, [
             ("rep", (8, (1, 3), 1, 1, 2, _v_4x2, True)),
             ("zero", (8, (5, 7))),
         ]), proven=True)
    _add("RV3", "sum", 2, "p > 3",
         "sum C(2k,k)^2 C(3k,k)/108^k = 4x^2-2p or 0 mod p^2",
         _pattern_checker("sum", "CUBE2K3K", 108, 3, [
             ("rep", (3, (1,), 1, 1, 3, _v_4x2, True)),
             ("zero", (3, (2,))),
         ]), proven=True)

    # quartic, sextic and cubic families: the representation branch is the
    # conjecture, the complementary zero branch (Z-id) is proven.
    rows = [
        ("4.1", "QUARTIC", 648, 3, (4, (1,), 1, 1, 1,
         _v_4x2, True), (4, (3,)), "sum (4k)!/(648^k k!^4)"),
        ("4.2", "QUARTIC", -144, 3, (3, (1,), 1, 1, 3, _v_4x2, True),
         (3, (2,)), "sum (4k)!/((-144)^k k!^4)"),
        ("4.3", "QUARTIC", -3969, 3, (7, (1, 2, 4), 1, 1, 7, _v_4x2, True),
         (7, (3, 5, 6)), "sum (4k)!/((-3969)^k k!^4)"),
        ("4.4", "SIX3K", 287496, 3, (4, (1,), 1, 1, 1,
         lambda p, x, y: jacobi(p, 33) * (4 * x * x - 2 * p), True), (4, (3,)),
         "sum (6k)!/(66^(3k) (3k)! k!^3)"),
        ("4.5", "SIX3K", 8000, 3, (8, (1, 3), 1, 1, 2,
         lambda p, x, y: jacobi(-5, p) * (4 * x * x - 2 * p), True), (8, (5, 7)),
         "sum (6k)!/(20^(3k) (3k)! k!^3)"),
        ("4.6", "SEXTIC", 54000, 3, (3, (1,), 1, 1, 3,
         lambda p, x, y: jacobi(p, 5) * (4 * x * x - 2 * p), True), (3, (2,)),
         "sum (6k)!/(54000^k (3k)! k!^3)"),
        ("4.8", "SIX3K", -3375, 3, (7, (1, 2, 4), 1, 1, 7,
         lambda p, x, y: jacobi(p, 15) * (4 * x * x - 2 * p), True), (7, (3, 5, 6)),
         "sum (6k)!/((-15)^(3k) (3k)! k!^3)"),
        ("4.9", "SIX3K", 16581375, 3, (7, (1, 2, 4), 1, 1, 7,
         lambda p, x, y: jacobi(p, 255) * (4 * x * x - 2 * p), True),
         (7, (3, 5, 6)), "sum (6k)!/(255^(3k) (3k)! k!^3)"),
    ]
    for sid, fam, m, pmin, repdata, zdata, disp in rows:
        _add(sid, "sum", 2, f"p > {pmin}, representation class", disp,
             _pattern_checker("sum", fam, m, pmin, [("rep", repdata)]))
        _add("Z" + sid, "sum", 2, f"p > {pmin}, complementary class",
             disp + " = 0 mod p^2",
             _pattern_checker("sum", fam, m, pmin, [("zero", zdata)]),
             proven=True)

    _add("4.7", "sum", 2, "p > 5",
         "sum (6k)!/((-12288000)^k (3k)! k!^3) = (10/p)(L^2-2p) or 0 mod p^2",
         _pattern_checker("sum", "SEXTIC", -12288000, 5, [
             ("rep", (3, (1,), 4, 1, 27,
                      lambda p, L, M: jacobi(10, p) * (L * L - 2 * p), True)),
             ("zero", (3, (2,))),
         ]))
    _add("4.10", "sum", 2, "p > 3",
         "sum C(2k,k)^2 C(3k,k)/1458^k = 4x^2-2p or 0 mod p^2",
         _pattern_checker("sum", "CUBE2K3K", 1458, 3, [
             ("rep", (3, (1,), 1, 1, 3, _v_4x2, True)),
             ("zero", (3, (2,))),
         ]))
    _add("4.11", "sum", 2, "p > 5",
         "sum C(2k,k)^2 C(3k,k)/15^(3k): three-way branch mod 15",
         _pattern_checker("sum", "CUBE2K3K", 3375, 5, [
             ("rep", (15, (1, 4), 1, 1, 15, _v_4x2, True)),
             ("rep", (15, (2, 8), 1, 3, 5, _v_m12x2, True)),
             ("zero", (15, (7, 11, 13, 14))),
         ]))
    _add("4.12", "sum", 2, "p > 3",
         "sum C(2k,k)^2 C(3k,k)/(-8640)^k: cube-root-of-unity branch",
         _check_412)
    _add("4.13", "sum", 2, "p = 1 mod 12, p = a^2+4b^2 = A^2+3B^2",
         "sum_(k<=(p-1)/6) C(6k,3k)^2/(-16)^(3k) = "
         "(-1)^((p-1)/4)(2a+4A-p/(2a)-p/A)/3 mod p^2", _check_413)

    _add("4.14", "zp", 2, "odd p",
         "Z_p(-16): four branches through p = x^2+y^2", _check_414)
    _add("4.15", "zp", 2, "odd p not dividing 96",
         "Z_p(96) = (p/3)(4x^2-2p) or 0 mod p^2",
         _zp_checker(96, 2, [("rep", (8, (1, 3), 1, 1, 2,
                              lambda p, x, y: jacobi(p, 3) * (4 * x * x - 2 * p),
                              True)),
                             ("zero", (8, (5, 7)))]))
    _add("4.16", "zp", 2, "p > 5",
         "Z_p(50) = 4x^2-2p or 0 mod p^2",
         _zp_checker(50, 5, [("rep", (3, (1,), 1, 1, 3, _v_4x2, True)),
                             ("zero", (3, (2,)))]))
    _add("4.17", "zp", 2, "p > 5",
         "Z_p(16): p or 2p form branch mod 20",
         _zp_checker(16, 5, [("rep", (20, (1, 9), 1, 1, 5, _v_4x2, True)),
                             ("rep", (20, (3, 7), 2, 1, 5, _v_2x2, True)),
                             ("zero", (20, (11, 13, 17, 19)))]))
    _add("4.18", "zp", 2, "p > 3",
         "Z_p(32): form branch mod 24",
         _zp_checker(32, 3, [("rep", (24, (1, 7), 1, 1, 6, _v_4x2, True)),
                             ("rep", (24, (5, 11), 1, 2, 3, _v_8x2, True)),
                             ("zero", (24, (13, 17, 19, 23)))]))
    _add("4.19", "zp", 2, "p > 7",
         "Z_p(5) = Z_p(-49): form branch mod 30", _check_419)
    _add("4.20", "zp", 2, "p != 2, 3, b and p does not divide f(b)",
         "Z_p(f(b)): four forms of discriminant -12b or 0",
         _genus_zp_checker("4.20"), params=("b",))
    _add("4.21", "zp", 2, "p != 2, 3, b and p does not divide f(b)",
         "Z_p(f(b)): four forms of discriminant -24b or 0",
         _genus_zp_checker("4.21"), params=("b",))

    for suf, m, w, coef, sym, excl in [
        ("a", 5, (9, 4), 4, lambda p: J(p, 5), ()),
        ("b", 16, (5, 2), 2, lambda p: 1, ()),
        ("c", 50, (9, 2), 2, lambda p: J(-1, p), ()),
        ("d", 96, (5, 1), 1, lambda p: J(-2, p), ()),
        ("e", 320, (6, 1), 1, lambda p: J(p, 15), ()),
        ("f", 896, (90, 13), 13, lambda p: J(p, 7), ()),
        ("g", 10400, (102, 11), 11, lambda p: J(p, 39), ()),
    ]:
        _add(f"4.22{suf}", "weighted", 2, "p > 3",
             f"sum ({w[0]}n+{w[1]}) C(2n,n)/{m}^n f_n = {coef} sym p mod p^2",
             _weighted_checker("ZP", m, w, coef, sym, 3, excl))
    for suf, m, w, coef, sym, excl in [
        ("a", -16, (3, 1), 1, lambda p: J(-1, p), ()),
        ("b", -49, (15, 4), 4, lambda p: J(p, 3), (5,)),
        ("c", -112, (9, 2), 2, lambda p: J(p, 7), ()),
        ("d", -400, (99, 17), 17, lambda p: J(-1, p), ()),
        ("e", -2704, (855, 109), 109, lambda p: J(-1, p), ()),
        ("f", -24304, (585, 58), 58, lambda p: J(-31, p), ()),
    ]:
        _add(f"4.23{suf}", "weighted", 2, "p > 3",
             f"sum ({w[0]}n+{w[1]}) C(2n,n)/({m})^n f_n = {coef} sym p mod p^2",
             _weighted_checker("ZP", m, w, coef, sym, 3, excl))
    for suf, m, w, coef, sym in [
        ("a", -3375, (63, 8), 8, lambda p: J(-15, p)),
        ("b", 16581375, (133, 8), 8, lambda p: J(-255, p)),
        ("c", 8000, (28, 3), 3, lambda p: J(-5, p)),
        ("d", 287496, (63, 5), 5, lambda p: J(-33, p)),
        ("e", 54000, (11, 1), 1, lambda p: J(-15, p)),
        ("f", -12288000, (506, 31), 31, lambda p: J(-30, p)),
    ]:
        _add(f"4.24{suf}", "weighted", 2, "p > 5",
             f"sum ({w[0]}k+{w[1]}) C(2k,k)C(3k,k)C(6k,3k)/({m})^k "
             f"= {coef} sym p mod p^2",
             _weighted_checker("SIX3K", m, w, coef, sym, 5))

    _add("4.25", "genbinom", 2, "p > 5",
         "paired C(-1/3,.)C(-1/6,.) sums at -4: form branch mod 30", _check_425)
    _add("4.25c", "genbinom", 1, "p = 5x^2 + 3y^2, p = 2 mod 3",
         "x(x/3) = (1/2) sum_(k<=(p-5)/6) C((p-2)/3,k)C((p-5)/6,k)(-4)^k mod p",
         _corollary_checker("4.25c", F(-4), F(1, 2), (1, 5, 3)))
    _add("4.26", "genbinom", 2, "p > 3",
         "paired sums at 1/2: form branch mod 24", _check_426)
    _add("4.26c", "genbinom", 1, "p = 2x^2 + 3y^2, p = 2 mod 3",
         "x(x/3) = -(1/4) sum_(k<=(p-5)/6) C((p-2)/3,k)C((p-5)/6,k)/2^k mod p",
         _corollary_checker("4.26c", F(1, 2), F(-1, 4), (1, 2, 3)))
    _add("4.27", "genbinom", 2, "p > 3",
         "paired sums at -1/16: 4p form branch, discriminant -204",
         _twist_pair_sym(F(-1, 16), 17, F(17, 16), 17, F(1, 4)))
    _add("4.27c", "genbinom", 1, "4p = 17x^2 + 3y^2, p = 2 mod 3",
         "x(x/3) = -(1/4) sum_(k<=(p-5)/6) C((p-2)/3,k)C((p-5)/6,k)/(-16)^k mod p",
         _corollary_checker("4.27c", F(-1, 16), F(-1, 4), (4, 17, 3)))
    _add("4.28", "genbinom", 2, "p > 3",
         "paired sums at -1/1024: 4p form branch, discriminant -492",
         _twist_pair_sym(F(-1, 1024), 41, F(1025, 1024), 41, F(5, 32)))
    _add("4.28c", "genbinom", 1, "4p = 41x^2 + 3y^2, p = 2 mod 3",
         "x(x/3) = -(5/32) sum_(k<=(p-5)/6) C((p-2)/3,k)C((p-5)/6,k)/(-1024)^k mod p",
         _corollary_checker("4.28c", F(-1, 1024), F(-5, 32), (4, 41, 3)))
    _add("4.29", "genbinom", 2, "p > 3",
         "paired sums at -1/250000: 4p form branch, discriminant -1068",
         _twist_pair_sym(F(-1, 250000), 89, F(250001, 250000), 89, F(53, 500)))
    _add("4.29c", "genbinom", 1, "4p = 89x^2 + 3y^2, p = 2 mod 3",
         "x(x/3) = -(53/500) sum_(k<=(p-5)/6) C((p-2)/3,k)C((p-5)/6,k)"
         "/(-250000)^k mod p",
         _corollary_checker("4.29c", F(-1, 250000), F(-53, 500), (4, 89, 3)))
    _add("4.30", "genbinom", 2, "p > 5",
         "paired sums at -1/80: normalized 4p form branch mod 30", _check_430)
    _add("4.31", "genbinom", 2, "p > 11, (p/11) = 1, 4p = x^2 + 11y^2",
         "paired sums at 27/16: (p/3)(-2/p)-twisted x or y values mod p^2",
         _check_431)
    _add("4.31c", "genbinom", 1, "(p/11) = 1, 4p = x^2 + 11y^2, p = 2 mod 3",
         "y((-11+(x/11)x/y)/p) = (p/3)(-2/p)(1/4) sum_(k<=(p-5)/6) "
         "C((p-2)/3,k)C((p-5)/6,k)(27/16)^k mod p",
         _corollary_checker("4.31c", F(27, 16), F(1, 4), (4, 1, 11)))
    _add("4.32", "genbinom", 2, "p = 1 mod 3, 4p = L^2 + 27M^2",
         "paired sums at -9/16 = L - p/L mod p^2", _check_432)
    _add("4.33", "genbinom", 2, "p = 1,3 mod 8, p = c^2 + 2d^2",
         "paired sums at 27/2: branch mod 24 with ((-2-c/d)/p) twists",
         _check_433)
    _add("4.34", "genbinom", 2, "p = 1 mod 3, 4p = L^2 + 27M^2",
         "sum C(-1/3,k)^2 9^k = L - p/L mod p^2", _check_434)
    _add("4.35a", "genbinom", 2, "p = 1 mod 4, p = x^2 + y^2, x = 1 mod 4",
         "sum C(-1/4,k)^2 (-8)^k = (-1)^((p-1)/4)(2x - p/(2x)) mod p^2",
         _check_435("a"))
    _add("4.35b", "genbinom", 2, "p = 1 mod 4, p = x^2 + y^2, x = 1 mod 4",
         "sum C(-1/4,k)^2 (-1/8)^k: branch mod 8", _check_435("b"))
    _add("4.36a", "genbinom", 2, "p = 1 mod 3, p = A^2 + 3B^2",
         "sum C(-1/4,k)^2 4^k = sum C(-1/4,k)C(-1/2,k)(-8)^k = branch mod 12",
         _check_436("a"))
    _add("4.36b", "genbinom", 2, "p = 1 mod 3, p = A^2 + 3B^2",
         "sum C(-1/4,k)^2/4^k: branch mod 12", _check_436("b"))
    _add("4.37a", "genbinom", 2, "p = 1,2,4 mod 7, p = x^2 + 7y^2",
         "sum C(-1/4,k)^2 64^k: branch mod 4 with (2/p)", _check_437("a"))
    _add("4.37b", "genbinom", 2, "p = 1,2,4 mod 7, p = x^2 + 7y^2",
         "sum C(-1/4,k)^2/64^k: branch mod 4", _check_437("b"))
    _add("4.38", "genbinom", 2, "odd p",
         "sum (-1)^k C(-1/4,k)^2: p = x^2+2y^2 branches or 0", _check_438)
    _add("4.39", "genbinom", 2, "odd p",
         "sum C(-1/4,k)C(-1/2,k)/4^k = (p/3) sum C(-1/2,k)C(-1/6,k)2^k: "
         "branch mod 12", _check_439)
    _add("4.40", "genbinom", 2, "odd p, p != 5",
         "sums at -1/3 and 1/81 tied by (-1)^((p-1)/4)(2/p)(p/3), "
         "value 2x - p/(2x)", _check_440)
    _add("4.41", "genbinom", 2, "odd p",
         "sum C(-1/4,k)C(-1/2,k)/(-80)^k: x or y branch mod 5", _check_441)
    _add("4.42", "genbinom", 2, "p > 5",
         "sum C(-1/4,k)C(-1/2,k)2^k = 2x - p/(2x) or 0", _check_442)
    _add("4.43", "genbinom", 2, "p > 5",
         "five C(-1/2,.) sums all equal 2A - p/(2A) or 0", _check_443)
    _add("4.44", "genbinom", 2, "p > 5",
         "sum C(-1/2,k)C(-1/3,k)/(-4)^k: 5|AB vs A/B = -1,-2 mod 5 branch",
         _check_444)
    _add("4.45", "genbinom", 2, "p > 5",
         "sum C(-1/2,k)C(-1/6,k)(-3/125)^k = 2A - p/(2A) or 0", _check_445)
    for part in ("i", "ii", "iii", "iv"):
        cls = {"i": "p = 1 mod 4", "ii": "p = 1,2,4 mod 7",
               "iii": "p = 1,3 mod 8", "iv": "p = 1 mod 3"}[part]
        _add(f"4.46{part}", "central3", 3, f"p > 3, {cls}",
             "central cube sum = symbol-twisted triple-product sums mod p^3",
             _check_446(part))
    _add("DED", "identity", 1, "p > 3, m != 0, 16, 64 mod p",
         "four-way mod-p identity: central cubes, Legendre polynomial square, "
         "cubic character square, triple-product truncations", _check_ded,
         params=("m",), proven=True)


_build_catalog()


# oracle spec exports: every factorial-family (family, m, weight, upper)
# tuple the catalog evaluates, and every generalized-binomial (r1, r2, x)
# triple, consumed by the exact big-rational reference suite.
ORACLE_SUM_SPECS = [
    ("RV1", SumSpec("SEXTIC", 1728)),
    ("RV2", SumSpec("QUARTIC", 256)),
    ("RV3", SumSpec("CUBE2K3K", 108)),
    ("4.1", SumSpec("QUARTIC", 648)),
    ("4.2", SumSpec("QUARTIC", -144)),
    ("4.3", SumSpec("QUARTIC", -3969)),
    ("4.4", SumSpec("SIX3K", 287496)),
    ("4.5", SumSpec("SIX3K", 8000)),
    ("4.6", SumSpec("SEXTIC", 54000)),
    ("4.7", SumSpec("SEXTIC", -12288000)),
    ("4.8", SumSpec("SIX3K", -3375)),
    ("4.9", SumSpec("SIX3K", 16581375)),
    ("4.10", SumSpec("CUBE2K3K", 1458)),
    ("4.11", SumSpec("CUBE2K3K", 3375)),
    ("4.12", SumSpec("CUBE2K3K", -8640)),
    ("4.13", SumSpec("BINOM63SQ", -4096, upper="(p-1)/6")),
    ("4.14", SumSpec("ZP", -16)),
    ("4.15", SumSpec("ZP", 96)),
    ("4.16", SumSpec("ZP", 50)),
    ("4.17", SumSpec("ZP", 16)),
    ("4.18", SumSpec("ZP", 32)),
    ("4.19", SumSpec("ZP", 5)),
    ("4.19", SumSpec("ZP", -49)),
    ("4.46i", SumSpec("CENTRAL3", 64, upper="(p-1)/2")),
    ("4.46ii", SumSpec("CENTRAL3", 1, upper="(p-1)/2")),
    ("4.46iii", SumSpec("CENTRAL3", -64, upper="(p-1)/2")),
    ("4.46iv", SumSpec("CENTRAL3", 256, upper="(p-1)/2")),
    ("4.46i", SumSpec("SIX3K", 1728)),
]
ORACLE_SUM_SPECS += [("4.20", SumSpec("ZP", m)) for m in sorted(_F420.values())]
ORACLE_SUM_SPECS += [("4.21", SumSpec("ZP", m)) for m in sorted(_F421.values())]
ORACLE_SUM_SPECS += [
    (f"4.22{suf}", SumSpec("ZP", m, weight=w))
    for suf, m, w in [("a", 5, (9, 4)), ("b", 16, (5, 2)), ("c", 50, (9, 2)),
                      ("d", 96, (5, 1)), ("e", 320, (6, 1)), ("f", 896, (90, 13)),
                      ("g", 10400, (102, 11))]
]
ORACLE_SUM_SPECS += [
    (f"4.23{suf}", SumSpec("ZP", m, weight=w))
    for suf, m, w in [("a", -16, (3, 1)), ("b", -49, (15, 4)), ("c", -112, (9, 2)),
                      ("d", -400, (99, 17)), ("e", -2704, (855, 109)),
                      ("f", -24304, (585, 58))]
]
ORACLE_SUM_SPECS += [
    (f"4.24{suf}", SumSpec("SIX3K", m, weight=w))
    for suf, m, w in [("a", -3375, (63, 8)), ("b", 16581375, (133, 8)),
                      ("c", 8000, (28, 3)), ("d", 287496, (63, 5)),
                      ("e", 54000, (11, 1)), ("f", -12288000, (506, 31))]
]

ORACLE_GENBINOM_SPECS = [
    ("4.25", F(-1, 3), F(-1, 6), F(-4)),
    ("4.25", F(-2, 3), F(-5, 6), F(-4)),
    ("4.26", F(-1, 3), F(-1, 6), F(1, 2)),
    ("4.26", F(-2, 3), F(-5, 6), F(1, 2)),
    ("4.27", F(-1, 3), F(-1, 6), F(-1, 16)),
    ("4.28", F(-1, 3), F(-1, 6), F(-1, 1024)),
    ("4.29", F(-1, 3), F(-1, 6), F(-1, 250000)),
    ("4.30", F(-1, 3), F(-1, 6), F(-1, 80)),
    ("4.30", F(-2, 3), F(-5, 6), F(-1, 80)),
    ("4.31", F(-1, 3), F(-1, 6), F(27, 16)),
    ("4.32", F(-1, 3), F(-1, 6), F(-9, 16)),
    ("4.32", F(-2, 3), F(-5, 6), F(-9, 16)),
    ("4.33", F(-1, 3), F(-1, 6), F(27, 2)),
    ("4.34", F(-1, 3), F(-1, 3), F(9)),
    ("4.35a", F(-1, 4), F(-1, 4), F(-8)),
    ("4.35b", F(-1, 4), F(-1, 4), F(-1, 8)),
    ("4.36a", F(-1, 4), F(-1, 4), F(4)),
    ("4.36a", F(-1, 4), F(-1, 2), F(-8)),
    ("4.36b", F(-1, 4), F(-1, 4), F(1, 4)),
    ("4.37a", F(-1, 4), F(-1, 4), F(64)),
    ("4.37b", F(-1, 4), F(-1, 4), F(1, 64)),
    ("4.38", F(-1, 4), F(-1, 4), F(-1)),
    ("4.39", F(-1, 4), F(-1, 2), F(1, 4)),
    ("4.39", F(-1, 2), F(-1, 6), F(2)),
    ("4.40", F(-1, 4), F(-1, 2), F(-1, 3)),
    ("4.40", F(-1, 4), F(-1, 2), F(1, 81)),
    ("4.41", F(-1, 4), F(-1, 2), F(-1, 80)),
    ("4.42", F(-1, 4), F(-1, 2), F(2)),
    ("4.43", F(-1, 2), F(-1, 3), F(-3)),
    ("4.43", F(-1, 2), F(-1, 3), F(-1, 27)),
    ("4.43", F(-1, 2), F(-2, 3), F(-1, 4)),
    ("4.43", F(-1, 2), F(-1, 3), F(1, 5)),
    ("4.43", F(-1, 2), F(-1, 3), F(2)),
    ("4.44", F(-1, 2), F(-1, 3), F(-1, 4)),
    ("4.45", F(-1, 2), F(-1, 6), F(-3, 125)),
]


# ---------------------------------------------------------------------------
# public api


def catalog() -> list:
    """All statement descriptors in catalog order."""
    return [_CATALOG[i] for i in _ORDER]


def get_statement(sid: str) -> Statement:
    try:
        return _CATALOG[sid]
    except KeyError:
        raise ValueError(f"unknown statement id {sid!r}") from None


def _as_links3(out):
    if len(out) == 2:
        branch, links = out
        return branch, links, []
    return out


def check(sid, p: Optional[int] = None, params: Optional[dict] = None,
          e_override: Optional[int] = None) -> Verdict:
    """Evaluate one statement instance.

    Accepts check(id, p, params=..., e_override=...) or
    check(ConjectureInstance, e_override).  Pure: no state survives
    beyond per-prime caches.
    """
    if isinstance(sid, ConjectureInstance):
        inst = sid
        if e_override is None and isinstance(p, int):
            e_override = p
    else:
        inst = ConjectureInstance(sid, p, tuple(sorted((params or {}).items())))
    st = get_statement(inst.id)
    pd = inst.params_dict()
    missing = [name for name in st.params if name not in pd]
    if missing:
        raise ValueError(f"statement {st.id} needs parameter(s) {missing}")
    extra = [name for name in pd if name not in st.params]
    if extra:
        raise ValueError(f"statement {st.id} does not take parameter(s) {extra}")
    e = e_override if e_override is not None else st.modexp
    base = Verdict(id=st.id, p=inst.p, params=pd, modulus=inst.p ** e)
    try:
        pp = PrimePower(inst.p, e)
    except ValueError as exc:
        base.status = Status.ANOMALY
        base.diagnostics = str(exc)
        return base
    try:
        branch, links, diags = _as_links3(st.checker(inst, pp))
    except NotApplicable as exc:
        base.status = Status.NOT_APPLICABLE
        base.diagnostics = str(exc)
        return base
    except Anomaly as exc:
        base.status = Status.ANOMALY
        base.diagnostics = str(exc)
        return base
    base.branch = branch
    notes = list(diags)
    failed = None
    for label, lhs, rhs, le in links:
        le = min(le, e)
        pe = inst.p ** le
        ok = (lhs - rhs) % pe == 0
        notes.append(f"{label}: {lhs % pe} vs {rhs % pe} (mod p^{le})"
                     + ("" if ok else " MISMATCH"))
        if not ok and failed is None:
            failed = (lhs % pe, rhs % pe, pe)
    if failed is None:
        label, lhs, rhs, le = links[0]
        le = min(le, e)
        base.status = Status.HOLDS
        base.lhs = lhs % inst.p ** le
        base.rhs = rhs % inst.p ** le
        base.modulus = inst.p ** le
    else:
        base.status = Status.FAILS
        base.lhs, base.rhs, base.modulus = failed
    base.diagnostics = "; ".join(notes)
    return base


_DEFAULT_B_MAX = {"2.10": 60, "3.1i": 60, "3.1ii": 60,
                  "3.2": 100, "3.3": 100, "3.4": 100}


def instances_for(sid: str, p: int, grids: Grids) -> Iterator[dict]:
    """Parameter grid for one statement at one prime."""
    st = get_statement(sid)
    if not st.params:
        yield {}
        return
    name = st.params[0]
    if name == "q":
        qm, qr = {"2.7": (8, 3), "2.8": (16, 7), "2.9": (16, 15)}[sid[:3]]
        for q in primes_in_range(3, grids.q_max):
            if q % qm == qr and q != p:
                yield {"q": q}
    elif name == "b":
        if sid == "4.20":
            for b in sorted(_F420):
                yield {"b": b}
        elif sid == "4.21":
            for b in sorted(_F421):
                yield {"b": b}
        else:
            bmax = grids.b_max if grids.b_max is not None \
                else _DEFAULT_B_MAX.get(sid, 60)
            start, step = {"3.2": (4, 8), "3.3": (8, 8), "3.4": (2, 4)} \
                .get(sid, (1, 2))
            for b in range(start, bmax + 1, step):
                yield {"b": b}
    elif name == "k":
        for k in range(1, grids.k_max, 2):
            yield {"k": k}
    elif name == "m":
        for m in grids.m_values:
            yield {"m": m}
    else:
        raise ValueError(f"unknown parameter {name!r}")


def _sweep_chunk(args) -> list:
    plist, ids, grids, e_override = args
    out = []
    for p in plist:
        for sid in ids:
            for params in instances_for(sid, p, grids):
                out.append(check(sid, p, params, e_override))
    return out


def sweep(ids: Optional[Sequence[str]] = None, pmin: int = 3, pmax: int = 1000,
          grids: Optional[Grids] = None, jobs: int = 1,
          e_override: Optional[int] = None) -> list:
    """Check the given statements at every odd prime in [pmin, pmax).

    Output order is (p, id, params), independent of the worker count.
    """
    if pmax ** 3 >= 2 ** 63:
        raise ValueError("prime bound too large for the arithmetic contract")
    ids = list(ids) if ids else list(_ORDER)
    for sid in ids:
        get_statement(sid)
    grids = grids or Grids()
    primes = primes_in_range(max(pmin, 3), pmax)
    if jobs <= 1 or len(primes) < 2 * jobs:
        verdicts = _sweep_chunk((primes, ids, grids, e_override))
    else:
        chunks = [primes[i::jobs] for i in range(jobs)]
        verdicts = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_sweep_chunk,
                                 [(c, ids, grids, e_override) for c in chunks]):
                verdicts.extend(part)
    verdicts.sort(key=Verdict.sort_key)
    return verdicts


def summarize(verdicts: Iterable[Verdict]) -> dict:
    counts = {s.value: 0 for s in Status}
    for v in verdicts:
        counts[v.status.value] += 1
    return counts
