"""Representations of N by ax^2 + by^2 and the sign conventions built on them."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .verdicts import Anomaly


@dataclass(frozen=True)
class QuadRep:
    a: int
    b: int
    N: int
    x: int
    y: int


@dataclass(frozen=True)
class TwoAdicSplit:
    t: int
    alpha: int
    t0: int


def represent(N: int, a: int, b: int) -> list[QuadRep]:
    """All (x, y) with x, y >= 0 and a*x^2 + b*y^2 = N, sorted by x.

    Callers generate the other sign combinations.
    """
    out = []
    for y in range(isqrt(N // b) + 1):
        rem = N - b * y * y
        if rem % a:
            continue
        q = rem // a
        x = isqrt(q)
        if x * x == q:
            out.append(QuadRep(a, b, N, x, y))
    out.sort(key=lambda r: r.x)
    return out


def two_adic_split(t: int) -> TwoAdicSplit:
    if t == 0:
        raise ValueError("t must be nonzero")
    alpha, t0 = 0, t
    while t0 % 2 == 0:
        t0 //= 2
        alpha += 1
    return TwoAdicSplit(t, alpha, t0)


def normalize_odd_part_sign(t: int) -> int:
    """+t or -t, whichever has odd part = 1 mod 4."""
    if t == 0:
        raise Anomaly("cannot sign-normalize a zero coordinate")
    return t if two_adic_split(t).t0 % 4 == 1 else -t


def delta(t: int) -> int:
    """+1 iff 8 | t."""
    return 1 if t % 8 == 0 else -1


def two_squares_normalized(p: int) -> tuple[int, int]:
    """The unique (c, d) with p = c^2 + d^2, c = 1 mod 4, odd part of d = 1 mod 4."""
    if p % 4 != 1:
        raise Anomaly(f"{p} is not 1 mod 4")
    reps = represent(p, 1, 1)
    if not reps:
        raise Anomaly(f"{p} has no two-squares representation")
    r = reps[0]
    c, d = (r.x, r.y) if r.x % 2 else (r.y, r.x)
    if c % 4 != 1:
        c = -c
    return c, normalize_odd_part_sign(d)
