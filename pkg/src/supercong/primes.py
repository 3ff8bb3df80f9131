"""Deterministic small-range prime generation for sweeps."""
from __future__ import annotations

from math import isqrt


def sieve(limit: int) -> list[int]:
    """All primes < limit."""
    if limit <= 2:
        return []
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit) if flags[i]]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p < hi, by sieving the segment [lo, hi)."""
    if hi <= lo or hi <= 2:
        return []
    lo = max(lo, 2)
    base = sieve(isqrt(hi - 1) + 1)
    flags = bytearray([1]) * (hi - lo)
    for q in base:
        start = max(q * q, (lo + q - 1) // q * q)
        flags[start - lo :: q] = bytearray(len(flags[start - lo :: q]))
    return [lo + i for i, f in enumerate(flags) if f]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    i = 11
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2 if i % 6 == 5 else 4
    return True
