"""Lucas sequences U_n(b,c), V_n(b,c) mod p^e: fast doubling and linear streams."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .modarith import PrimePower, inv_mod


@dataclass(frozen=True)
class LucasPair:
    u: int
    v: int
    cpow: int  # c^n mod p^e, carried so doubling needs no extra exponentiation
    n: int
    b: int
    c: int


def lucas_uv(b: int, c: int, n: int, pp: PrimePower) -> LucasPair:
    """(U_n, V_n) mod p^e by fast doubling.

    U_{2n} = U_n V_n, V_{2n} = V_n^2 - 2c^n, and the index+1 step
    U_{n+1} = (b U_n + V_n)/2, V_{n+1} = (d U_n + b V_n)/2 with d = b^2 - 4c.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    pe = pp.m
    b0, c0 = b % pe, c % pe
    d = (b0 * b0 - 4 * c0) % pe
    inv2 = inv_mod(2, pp)
    u, v, cp = 0, 2, 1  # n = 0
    for bit in bin(n)[2:] if n else "":
        u, v, cp = u * v % pe, (v * v - 2 * cp) % pe, cp * cp % pe
        if bit == "1":
            u, v = (b0 * u + v) * inv2 % pe, (d * u + b0 * v) * inv2 % pe
            cp = cp * c0 % pe
    return LucasPair(u, v, cp, n, b, c)


def lucas_stream(b: int, c: int, n_max: int, pp: PrimePower) -> Iterator[LucasPair]:
    """(U_k, V_k) for k = 0..n_max by the linear recurrence, O(1) per step."""
    pe = pp.m
    b0, c0 = b % pe, c % pe
    u0, u1 = 0, 1
    v0, v1 = 2, b0
    cp = 1
    for k in range(n_max + 1):
        yield LucasPair(u0, v0, cp, k, b, c)
        u0, u1 = u1, (b0 * u1 - c0 * u0) % pe
        v0, v1 = v1, (b0 * v1 - c0 * v0) % pe
        cp = cp * c0 % pe
